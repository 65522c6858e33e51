# StabiLens - stabilizer code parameters from Hermitian self-orthogonal codes
__version__ = "1.0.0"
