from . import chebyshev, construct, cosring, exactnum
