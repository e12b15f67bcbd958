"""burau-forge: exact verification of Burau images and their companion groups."""

__version__ = "0.1.0"

APP_LOGGER_NAME = 'BurauForge'
