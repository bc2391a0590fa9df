from .star_finder import ALL, StarFamily, check_star_family, find_disjoint_stars
