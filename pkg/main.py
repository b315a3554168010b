"""
Runner da CLI tgwa.
"""

from tgwa.cli.main import main


if __name__ == "__main__":
    main()
