"""Figure rendering for dyhops run directories."""

__version__ = "0.1.0"

from .figures import plot_error_curves, plot_spectra

__all__ = ["plot_spectra", "plot_error_curves"]
