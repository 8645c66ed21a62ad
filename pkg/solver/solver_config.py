MAX_AGENTS = 6
MAX_ITEMS = 8
# Perturbed negative problems: 5x6 takes about a minute, 5x7 about ten
SLOW_ENUMERATION_SIZE = 30  # agents * items from which a slow run is announced
