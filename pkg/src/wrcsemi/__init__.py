"""Right ideals, right congruences and closure witnesses for semigroups."""

__version__ = "0.1.0"
