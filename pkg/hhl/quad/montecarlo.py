# -*- coding: utf-8 -*-
# hhl - Hausdorff operators on the Heisenberg group, checked numerically
# Copyright(C) 2026, The hhl developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Seeded stratified Monte Carlo over Koranyi balls and central annuli.

A region is cut into log spaced Koranyi shells (the strata). In a shell the
radius is drawn with density proportional to rho^(Q-1) (uniform in rho^Q),
the direction by rejection from the bounding box of the unit ball followed by
the projection delta_(1/|x|_h). The innermost stratum of a ball uses the
density rho^(kappa-1) instead, so that integrands with a singularity at the
centre keep a finite variance.

Every stratum has its own generator spawned from the seed, so the samples do
not depend on the number of worker threads.
"""

import math
from dataclasses import dataclass

import numpy as np

from hhl import defs
from hhl.model import heisenberg
from hhl.model.heisenberg import AnnulusSpec, BallSpec
from hhl.utils import parallel
from hhl.utils.exceptions import DimensionError, ParameterError

from hhl.utils.ugettext import ugettext, ungettext
_ = ugettext


allocations = ('measure', 'log')


@dataclass(frozen=True)
class McConfig(object):
    '''Monte Carlo settings.

    allocation "measure" distributes samples proportionally to the shell
    measure, "log" puts the same number of samples in every shell (used for
    the y integrals of Hausdorff kernels, which live on all scales).
    '''
    seed: int = defs.mc_seed
    samples: int = defs.mc_samples
    strata: int = defs.mc_strata
    threads: object = None
    allocation: str = 'measure'

    def __post_init__(self):
        if self.strata < 1:
            raise ParameterError(_('requires at least one stratum'))
        if self.samples < self.strata:
            raise ParameterError(
                _('requires samples >= strata (%(samples)i < %(strata)i)') %
                {'samples': self.samples, 'strata': self.strata})
        if self.allocation not in allocations:
            raise ParameterError(_('unknown sample allocation "%s"') %
                                 self.allocation)

    def replace(self, **kwargs):
        values = dict(seed=self.seed, samples=self.samples, strata=self.strata,
                      threads=self.threads, allocation=self.allocation)
        values.update(kwargs)
        return McConfig(**values)


@dataclass(frozen=True)
class RestrictedRegion(object):
    '''The part of a base region where predicate(points) is true.'''
    base: object
    predicate: object


@dataclass
class Sample(object):
    '''Points with weights; estimate = sum(weights * f(points)).

    :ivar strata: stratum label of every point
    :ivar radii: Koranyi distance of every point from the region centre
    '''
    points: np.ndarray
    weights: np.ndarray
    strata: np.ndarray
    radii: np.ndarray
    count: int = 0

    def estimate(self, values):
        '''Stratified estimate and its standard error.'''
        values = np.asarray(values, dtype=float)
        if self.points.shape[0] == 0:
            return 0.0, 0.0
        contrib = self.weights * values
        value = 0.0
        variance = 0.0
        for s in range(self.count):
            mask = self.strata == s
            n = int(np.count_nonzero(mask))
            if n == 0:
                continue
            z = contrib[mask] * n
            value += float(np.sum(z)) / n
            if n > 1:
                variance += float(np.var(z, ddof=1)) / n
        return value, math.sqrt(variance)


def unit_sphere_sample(dim, count, rng):
    '''count points on the Koranyi unit sphere, distributed like the polar
    part of the Haar measure.'''
    d = dim.coords
    res = np.empty((0, d))
    while res.shape[0] < count:
        need = count - res.shape[0]
        batch = int(need * 2.5 * 2 ** dim.n) + 16
        x = rng.uniform(-1.0, 1.0, (batch, d))
        rho = heisenberg.koranyi_norm(x)
        keep = (rho < 1.0) & (rho > 1e-6)
        x = heisenberg.dilate(1.0 / rho[keep], x[keep])
        res = np.concatenate([res, x[:need]])
    return res


def _edges(region, strata):
    '''Stratum edges in Koranyi radius, with a flag for a core stratum.'''
    if isinstance(region, BallSpec):
        R = region.radius
        exponents = -(strata - 1 - np.arange(strata)) / 2.0
        return np.concatenate([[0.0], R * 2.0 ** exponents]), True
    if region.r_in == 0:
        exponents = -(strata - 1 - np.arange(strata)) / 2.0
        return np.concatenate([[0.0], region.r_out * 2.0 ** exponents]), True
    return np.geomspace(region.r_in, region.r_out, strata + 1), False


def _allocate(measures, cfg):
    strata = len(measures)
    if cfg.allocation == 'log':
        return np.full(strata, max(1, cfg.samples // strata), dtype=int)
    minimum = max(1, cfg.samples // (defs.mc_min_fraction * strata))
    share = measures / np.sum(measures)
    counts = np.floor(share * (cfg.samples - minimum * strata)).astype(int)
    return counts + minimum


def _sample_stratum(args):
    dim, rng_seed, r0, r1, count, core = args
    rng = np.random.default_rng(rng_seed)
    Q = dim.Q
    u = rng.uniform(0.0, 1.0, count)
    if core:
        kappa = defs.mc_core_exponent
        # avoid rho = 0 exactly
        u = np.where(u > 0, u, np.finfo(float).tiny)
        rho = r1 * u ** (1.0 / kappa)
        weights = dim.omega_Q * rho ** (Q - kappa) * r1 ** kappa / kappa / count
    else:
        rho = (r0 ** Q + u * (r1 ** Q - r0 ** Q)) ** (1.0 / Q)
        weights = np.full(count, dim.Omega_Q * (r1 ** Q - r0 ** Q) / count)
    sphere = unit_sphere_sample(dim, count, rng)
    points = heisenberg.dilate(rho, sphere)
    return points, weights, rho


def sample_region(region, dim, cfg):
    '''Draw the stratified sample of a region.

    :param region: BallSpec, AnnulusSpec or RestrictedRegion
    :return: :py:class:`Sample`
    '''
    if isinstance(region, RestrictedRegion):
        sample = sample_region(region.base, dim, cfg)
        keep = np.asarray(region.predicate(sample.points), dtype=bool)
        sample.weights = np.where(keep, sample.weights, 0.0)
        return sample

    if isinstance(region, BallSpec):
        if len(region.center) != dim.coords:
            raise DimensionError(_('the ball does not live in H^%i') % dim.n)
    elif not isinstance(region, AnnulusSpec):
        raise ParameterError(_('cannot sample a region of type %s') %
                             type(region).__name__)

    d = dim.coords
    empty = Sample(np.empty((0, d)), np.empty(0), np.empty(0, dtype=int),
                   np.empty(0), 0)
    if isinstance(region, AnnulusSpec) and not region.r_in < region.r_out:
        return empty

    edges, core = _edges(region, cfg.strata)
    Q = dim.Q
    measures = dim.Omega_Q * (edges[1:] ** Q - edges[:-1] ** Q)
    counts = _allocate(measures, cfg)
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.strata)

    jobs = [(dim, seeds[s], edges[s], edges[s + 1], int(counts[s]),
             core and s == 0) for s in range(cfg.strata)]
    parts = parallel.ordered_map(_sample_stratum, jobs, cfg.threads)

    points = np.concatenate([p[0] for p in parts])
    weights = np.concatenate([p[1] for p in parts])
    radii = np.concatenate([p[2] for p in parts])
    labels = np.concatenate([np.full(len(p[1]), s, dtype=int)
                             for s, p in enumerate(parts)])

    if isinstance(region, BallSpec) and not region.is_central:
        points = heisenberg.group_mul(region.center_array, points)

    return Sample(points, weights, labels, radii, cfg.strata)


def integrate_mc(f, region, cfg=None, dim=None):
    '''Stratified MC estimate of the integral of f over region.

    :return: (value, std_error); a region of zero measure gives (0, 0)
    '''
    if cfg is None:
        cfg = McConfig()
    if dim is None:
        dim = _region_dim(region)
    sample = sample_region(region, dim, cfg)
    if sample.points.shape[0] == 0:
        return 0.0, 0.0
    return sample.estimate(f(sample.points))


def _region_dim(region):
    while isinstance(region, RestrictedRegion):
        region = region.base
    return region.dim


def integrate_box_mc(f, lower, upper, cfg=None):
    '''Plain MC over the coordinate box [lower, upper], in Haar measure.'''
    if cfg is None:
        cfg = McConfig()
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    dim = heisenberg.HeisDim.for_coords(len(lower))
    if np.any(upper < lower):
        raise ParameterError(_('box bounds must satisfy lower <= upper'))
    volume = float(np.prod(upper - lower)) * dim.haar_normalization
    if volume == 0:
        return 0.0, 0.0
    rng = np.random.default_rng(cfg.seed)
    x = rng.uniform(lower, upper, (cfg.samples, len(lower)))
    values = np.asarray(f(x), dtype=float)
    return (volume * float(np.mean(values)),
            volume * float(np.std(values, ddof=1)) / math.sqrt(cfg.samples))


def mc_ball_volume(dim, cfg=None):
    '''Measure of the unit ball by rejection in its bounding box.'''
    ones = np.ones(dim.coords)

    def inside(x):
        return (heisenberg.koranyi_norm(x) < 1.0).astype(float)

    return integrate_box_mc(inside, -ones, ones, cfg)
