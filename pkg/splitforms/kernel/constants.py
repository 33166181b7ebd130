ALIASES_3D = ('x', 'y', 'z')
INDEXED_VARIABLE = 'x{}'
MAX_EXPONENT = 2 ** 63 - 1
