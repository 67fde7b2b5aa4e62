"""Published sequence terms, used to cross-check the formulas."""

LITTLE_SCHROEDER = (1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049)

LARGE_SCHROEDER = (1, 2, 6, 22, 90)

# sigma_1, sigma_2, ...
SIGMA = (2, 2, 6, 22, 90, 394)

# 2^n / ((alpha-1) n + 1) * C(alpha n, n), n = 1, 2, ...
N_BLOCKS = {
    1: (2, 4, 8, 16, 32, 64, 128, 256, 512, 1024),
    2: (2, 8, 40, 224, 1344, 8448, 54912, 366080),
    3: (2, 12, 96, 880, 8736, 91392, 992256, 11075328),
    4: (2, 16, 176, 2240, 31008, 453376, 6888960, 107707392),
    5: (2, 20, 280, 4560, 80960, 1520064, 29680640, 596593920),
}

N_BLOCKS_OEIS = {1: "A000079", 2: "A151374", 3: "A153231", 4: "A217360", 5: "A217364"}

# ordered trees by number of generators, n = 1, 2, ... (A108524)
TREES = (1, 2, 7, 32, 166, 926, 5419, 32816)

# simple rooted outerplanar maps with n + 1 vertices, n = 1, 2, ... (A064062)
MAPS = (1, 3, 13, 67, 381, 2307, 14589, 95235)

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429)
