"""Forensic integrity tests for country-level epidemic time series.

Two detectors: a regression of deviations around a 7-day centered moving
average on democracy scores (suppressed variation), and a Benford
first-digit goodness-of-fit test on growth-screened cumulative counts.
"""

__version__ = "0.1.0"
