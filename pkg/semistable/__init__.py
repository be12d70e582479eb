"""Radial semilinear elliptic problems on geodesic balls of Riemannian models."""
