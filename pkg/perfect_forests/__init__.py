"""Perfect forests in graphs: parity forests, their construction and brute-force certification."""

__version__ = "0.1.0"
