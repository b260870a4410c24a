# -*- coding: utf-8 -*-

"""
Workbench static configuration.
"""


class WeylBenchConfig:
    """ Static workbench configuration. """

    DEFAULT_WORKERS = 4
    """ Number of worker threads used by the suite runner. """

    STRUCTURE_SIZES_L = (2, 3, 4, 5, 6, 7)
    """ Sizes of L_n used by the structure suite when all suites are requested. """

    STRUCTURE_SIZES_C = (3, 5, 7)
    """ Sizes of C_n used by the structure suite when all suites are requested. """

    EMBEDDING_SIZES = (2, 3, 4, 5, 6, 7)
    """ Sizes used by the embedding suite when all suites are requested. """

    SPLITTING_CONSTANTS = ("0", "1", "-2")
    """ Constants lambda used by the splitting identity check. """

    CLUSTER_SIZES = (3, 5, 7)
    """ Odd sizes used by the cluster suite when all suites are requested. """

    POISSON_SIZES = (3, 5, 7)
    """ Odd sizes used by the poisson suite when all suites are requested. """

    SEED_WALK_LENGTH = 2
    """ Longest mutation walk replayed on full quantum seeds by the cluster suite. """

    COMPATIBILITY_WALK_LENGTH = 6
    """ Longest mutation walk replayed on (B, Lambda) alone by the cluster suite. """

    MULTIPLICATIVITY_SAMPLES = 50
    """ Random monomial pairs used to test multiplicativity of embeddings. """

    COHERENCE_SAMPLES = 50
    """ Random monomial pairs used by the quantum-Poisson coherence check. """

    PRODUCT_CACHE_LIMIT = 200000
    """ Entries kept in each product or z table of a presentation before it is reset. """

    RANDOM_SEED = 42
    """ Seed of the random generator used by sampled checks. """

    REPORT_SCHEMA_VERSION = 1
    """ Version of the JSON report schema. """

    SEED_SCHEMA_VERSION = 1
    """ Version of the JSON seed, presentation and bracket table schemas. """
