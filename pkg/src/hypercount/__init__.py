"""Exact enumeration of rooted m-hypermaps and m-constellations through
symmetric-group characters, with a brute-force oracle."""

from .census import CountQuery, count_constellations, count_hypermaps, genus_of
from .characters import border_strips, chi, frobenius_count
from .littlewood import decompositions, littlewood_rhs, verify_content_factorization, verify_littlewood
from .partitions import conjugate, content_poly, dimension, from_beta, m_split, scale, sign_theta, to_beta, z_of
from .relation import asymptotic_table, c_coeff, d_coeff, e_coeff, relation_rhs, verify_relation

__version__ = "0.1.0"
