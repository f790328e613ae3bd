"""Exact GIT stability for nets of quadrics, plane quartics and nets of plane cubics."""

__version__ = "0.1.0"
