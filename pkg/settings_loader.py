# settings_loader.py

"""
Modul zum Laden überschreibbarer Einstellungen aus einer externen Datei.
"""
import logging

logger = logging.getLogger(__name__)

# Schlüssel, die die Anwendung auswertet, und ihre Typen
KNOWN_KEYS = {
    'prime': int,
    'pair_budget': int,
    'log_level': str,
}


def load_settings(filepath):
    """
    Lädt Einstellungen aus einer Textdatei im Format 'KEY = WERT'.

    Args:
        filepath (str): Der Pfad zur Einstellungsdatei (z.B. "settings.txt").

    Returns:
        dict: Die erkannten Schlüssel mit bereits konvertierten Werten.
    """
    settings = {}
    logger.debug("Lade Einstellungen aus '%s'...", filepath)
    try:
        with open(filepath, 'r', encoding='utf-8') as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith('#'):
                    continue
                if '=' not in line:
                    logger.warning("Zeile ohne '=' in '%s' ignoriert: %s", filepath, line)
                    continue
                key, value = line.split('=', 1)
                key, value = key.strip().lower(), value.strip()
                convert = KNOWN_KEYS.get(key)
                if convert is None:
                    logger.warning("Unbekannter Schlüssel '%s' in '%s' ignoriert.", key, filepath)
                    continue
                try:
                    settings[key] = convert(value.replace('_', ''))
                except ValueError:
                    logger.warning("Ungültiger Wert für '%s': %s", key, value)
    except FileNotFoundError:
        logger.warning("Einstellungsdatei '%s' nicht gefunden. Es gelten die Defaults aus config.py.", filepath)

    logger.debug("%d Einstellungen geladen.", len(settings))
    return settings
