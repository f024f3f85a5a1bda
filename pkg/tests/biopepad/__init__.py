"""Tests für das Bio-PEPAd Toolkit."""
