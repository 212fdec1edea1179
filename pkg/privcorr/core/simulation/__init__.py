# -*- coding: utf-8 -*-
#
# Copyright 2024-2026 The privcorr developers.
#
#
# This file is part of privcorr.
#
# Licensed under the Apache License, Version 2.0.
# For full licensing information see /LICENSE.


""" Synthetic Gaussian-copula data for simulation studies. """

from privcorr.core.simulation.copula import (
    CopulaError, LatentFactor, latent_factor, random_correlation,
    sample_copula
)
from privcorr.core.simulation.marginals import (
    MarginalSpec, MarginalSpecError, parse_marginals
)
from privcorr.core.simulation.oracles import (
    OracleSizeError, brute_force_btgm_posterior_mean,
    brute_force_count_distribution, brute_force_marginal_likelihood
)

__all__ = [
    "CopulaError", "LatentFactor", "MarginalSpec", "MarginalSpecError",
    "OracleSizeError", "brute_force_btgm_posterior_mean",
    "brute_force_count_distribution", "brute_force_marginal_likelihood",
    "latent_factor", "parse_marginals", "random_correlation",
    "sample_copula",
]
