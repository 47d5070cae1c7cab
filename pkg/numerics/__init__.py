from . import quadrature, realnum
