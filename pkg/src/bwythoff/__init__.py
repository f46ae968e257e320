"""beta-Wythoff Nim: engine, solver, and verification workbench.

A two-pile take-away game: nim moves plus diagonal moves of width
k = floor(beta), except that from any position with a coordinate of the
form floor(n * beta) only nim moves are allowed.  The P-positions are the
Beatty pair {(floor(n*alpha), floor(n*beta))} and mirrors, alpha =
beta/(beta-1); this package computes them by retrograde analysis, computes
them in closed form with exact arithmetic, cross-verifies the two, and
plays the optimal strategy over a CLI and an HTTP session API.
"""

__version__ = "0.1.0"
