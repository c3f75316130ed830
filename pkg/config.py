# config.py

"""
Zentrale Konfigurationsdatei für die Konstruktion evasiver Unterraumfamilien.
Werte aus `settings.txt` und Kommandozeilen-Flags überschreiben diese Defaults.
"""

# Grundkörper F_p: Mersenne-Primzahl 2^61 - 1
DEFAULT_PRIME = 2**61 - 1

# Obergrenze für Primzahlen (Zufallsziehung läuft über den int64-Bereich von numpy)
MAX_PRIME = 2**63

# Maximale Anzahl verarbeiteter S-Paare pro Buchberger-Lauf
GROEBNER_PAIR_BUDGET = 50_000

# Versionszeile aller Dateiformate
FORMAT_VERSION = 1

# Dateiname für überschreibbare Einstellungen
SETTINGS_FILE = "settings.txt"

# Logging
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
LOG_LEVEL = 'INFO'

# Exit-Codes der Kommandozeile (stabiler Vertrag)
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FIELD_TOO_SMALL = 2
EXIT_GUARANTEE = 3
EXIT_BUDGET = 4
