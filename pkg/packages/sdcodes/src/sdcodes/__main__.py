"""Entry point for running sdcodes as a module."""

from sdcodes._cli import main

if __name__ == "__main__":
    main()
