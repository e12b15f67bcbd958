import sys
from pathlib import Path

# Run from a source checkout without installing
sys.path.insert(0, str(Path(__file__).parent / "src"))

from burau_forge.main import main, main_debug  # noqa: E402

if __name__ == '__main__':
    if "--debug" in sys.argv:
        sys.argv.remove("--debug")
        main_debug()
    else:
        main()
