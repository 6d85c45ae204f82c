#!/usr/bin/env python3
"""
curvekit - critical curves of the total-curvature energy.

Synthesizes closed-form extremals, completes curves between oriented
endpoints, lifts curves to R^2 x S^1 and sweeps extremals into surfaces
of constant negative curvature.
"""
import sys

from src.cli.commands import main

if __name__ == '__main__':
    sys.exit(main())
