"""Degeneracy loci, blow-up charts and rational singularity certificates."""

import json
from fractions import Fraction

from ._degloci import (
    DeglociError,
    dimension,
    fitting_ideal,
    flip_data,
    groebner_basis,
    ideal_equal,
    instance_ids,
    integral_closure,
    is_integrally_closed,
    kappa_flip_ok,
    rrv_normal,
)
from . import _degloci

__all__ = [
    "DeglociError",
    "blowup_criterion",
    "blowup_exponents",
    "certify_ideal",
    "certify_matrix",
    "charts",
    "dimension",
    "estimate_pushforward",
    "exact_cone_density_at_zero",
    "exact_monomial_density",
    "fitting_ideal",
    "flip_data",
    "groebner_basis",
    "ideal_equal",
    "instance_ids",
    "integral_closure",
    "is_integrally_closed",
    "kappa_flip_ok",
    "rrv_normal",
    "verify_genus2",
    "verify_genus3",
]


def blowup_criterion(vars, rows):
    return json.loads(_degloci._blowup_criterion(list(vars), rows))


def charts(vars, rows):
    return json.loads(_degloci._charts(list(vars), rows))


def certify_matrix(vars, rows):
    return json.loads(_degloci._certify_matrix(list(vars), rows))


def certify_ideal(vars, generators):
    return json.loads(_degloci._certify_ideal(list(vars), list(generators)))


def blowup_exponents(g, kappa="1/2"):
    out = json.loads(_degloci._blowup_exponents(g, str(kappa)))
    out["bundle_exp"] = Fraction(out["bundle_exp"])
    out["threshold"] = Fraction(out["threshold"])
    return out


def estimate_pushforward(f, vars, p=5, K=8, N=1_000_000, seed=1, centers=(), threads=1):
    """Density profile and boundedness verdict of the pushforward of Haar measure under f."""
    return json.loads(
        _degloci._estimate_pushforward(f, list(vars), p, K, N, seed, list(centers), threads)
    )


def exact_monomial_density(exponents, p, nu):
    num, den = _degloci._exact_monomial_density(list(exponents), p, nu)
    return Fraction(int(num), int(den))


def exact_cone_density_at_zero(p, k):
    num, den = _degloci._exact_cone_density_at_zero(p, k)
    return Fraction(int(num), int(den))


def verify_genus2(dmax=6):
    return json.loads(_degloci._verify_genus2(dmax))


def verify_genus3(instance=None, seed=1):
    return json.loads(_degloci._verify_genus3(instance, seed))
