"""
Gale Suite - Consola
Uso: python main.py <subcomando> [opciones]   (python main.py --help)
"""

import sys
from pathlib import Path

# Agregar el directorio scripts al path
BASE_DIR = Path(__file__).parent
sys.path.insert(0, str(BASE_DIR / "scripts"))

from commands.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
