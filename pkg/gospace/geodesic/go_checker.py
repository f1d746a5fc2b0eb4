"""Refutation, linear certification and sampling of the GO property.

A space is geodesic orbit iff every ``xi`` in ``m`` admits an ``alpha`` with
``(xi, alpha)`` on the moduli variety. Refutation exhibits an ``xi`` whose
geodesic system is inconsistent. Certification exhibits a linear map
``L: m -> h`` with ``phi(xi, L xi, zeta) = 0`` identically in ``xi``.
Sampling tests seeded vectors and reports how many passed.
"""
from logging import getLogger

from tqdm import tqdm

from gospace.config import DEFAULT_BOUND
from gospace.config import DEFAULT_CERTIFICATE_SAMPLES
from gospace.config import DEFAULT_NUM_SAMPLES
from gospace.config import DEFAULT_SEED
from gospace.exactla.matrix import Matrix
from gospace.exactla.matrix import solve_linear
from gospace.geodesic.moduli import ModuliPoint
from gospace.geodesic.moduli import omega_member
from gospace.geodesic.moduli import phi
from gospace.geodesic.moduli import solve_geodesic_vector
from gospace.geodesic.samplers import CERTIFICATE_STREAM
from gospace.geodesic.samplers import enumeration_prefix
from gospace.geodesic.samplers import get_random_state
from gospace.geodesic.samplers import null_vectors
from gospace.geodesic.samplers import random_integers
from gospace.geodesic.samplers import random_m_vector
from gospace.geodesic.samplers import REALFORM_STREAM
from gospace.geodesic.samplers import REFUTE_STREAM
from gospace.geodesic.samplers import SAMPLE_STREAM
from gospace.geodesic.verdict import CERTIFIED
from gospace.geodesic.verdict import GoVerdict
from gospace.geodesic.verdict import INCONCLUSIVE
from gospace.geodesic.verdict import REFUTED
from gospace.geodesic.verdict import SAMPLED
from gospace.utils.parallel_utils import get_n_jobs
from gospace.utils.parallel_utils import parallel_map

GO_MODES = ('auto', 'certify', 'refute', 'sample')
_CHUNK_PER_WORKER = 16


def _test_vector(space, xi):
    point, ranks = solve_geodesic_vector(space, xi, return_rank=True)
    return point is not None, ranks


def _scan(space, vectors, n_jobs=None, show_progress=False):
    """Index and ranks of the first vector without solution, else `None`.

    Vectors are evaluated in chunks; the first failure in list order is
    returned, so the answer does not depend on the number of workers.
    """
    for a in range(space.dim_h):
        space.ad_h(a)  # fill the cache before threads read it
    chunk = get_n_jobs(n_jobs) * _CHUNK_PER_WORKER
    starts = range(0, len(vectors), chunk)
    for start in tqdm(starts, disable=not show_progress):
        results = parallel_map(lambda xi: _test_vector(space, xi),
                               vectors[start:start + chunk], n_jobs=n_jobs)
        for offset, (ok, ranks) in enumerate(results):
            if not ok:
                return start + offset, ranks
    return None


def refute_go(space, budget=DEFAULT_NUM_SAMPLES, seed=DEFAULT_SEED,
              bound=DEFAULT_BOUND, n_jobs=None, show_progress=False,
              logger=None):
    """Searches for an ``xi`` which admits no ``alpha``.

    The enumeration prefix (basis vectors, pairwise sums and differences) is
    tested first, then `budget` seeded random vectors with integer
    coordinates in ``[-bound, bound]`` (Gaussian integers over a Gaussian
    space).

    Args:
        space (ReductiveSpace): validated space.
        budget (int): number of random vectors after the prefix.
        seed (int): random seed.
        bound (int): coordinate bound.
        n_jobs (int or None): worker count, see
            :func:`gospace.utils.get_n_jobs`.
        show_progress (bool): show a progress bar.
        logger:

    Returns (GoVerdict or None): refuted verdict, or `None` if every vector
        passed.

    """
    logger = logger or getLogger(__name__)
    if not space.dim_m:
        logger.debug('{}: m is trivial, nothing to refute'.format(space.name))
        return None
    prefix = enumeration_prefix(space)
    vectors = prefix + [random_m_vector(space, seed, REFUTE_STREAM, i, bound)
                        for i in range(budget)]
    found = _scan(space, vectors, n_jobs=n_jobs, show_progress=show_progress)
    if found is None:
        logger.debug('{}: no refutation among {} vectors'
                     .format(space.name, len(vectors)))
        return None
    index, ranks = found
    logger.info('{}: refuted by vector #{} (ranks {})'
                .format(space.name, index, ranks))
    return GoVerdict(space.name, REFUTED, witness=vectors[index],
                     ranks=ranks, tested=index + 1, failed=1, seed=seed,
                     extra={'enumerated': len(prefix)})


def linear_section_system(space):
    """Linear system for the entries of a linear section ``L: m -> h``.

    ``phi(xi, L xi, zeta_j)`` with ``c = 0`` is a quadratic form in ``xi``;
    it vanishes identically iff its coefficients on ``xi_p xi_q``
    (``p <= q``) vanish. Unknown ``(a, k)`` is ``L[a][k]`` at position
    ``a * |m| + k``.

    Returns (tuple): ``(A, b)``

    """
    n = space.dim_m
    zero = space.domain.zero
    q = space.metric
    # bracket_part[j][p][r] = <[m_p, zeta_j]_m, m_r>
    bracket_part = [[q.dot(space.bracket_m(space.m_basis_vector(p),
                                           space.m_basis_vector(j)))
                     for p in range(n)] for j in range(n)]
    # isotropy_part[j][a][r] = <[h_a, zeta_j]_m, m_r>
    isotropy_part = [[q.dot(space.ad_h(a).column(j))
                      for a in range(space.dim_h)] for j in range(n)]
    rows = []
    rhs = []
    for j in range(n):
        b = bracket_part[j]
        for p in range(n):
            for r in range(p, n):
                row = [zero] * (space.dim_h * n)
                for a, d in enumerate(isotropy_part[j]):
                    if p == r:
                        row[a * n + p] += d[p]
                    else:
                        row[a * n + p] += d[r]
                        row[a * n + r] += d[p]
                rows.append(row)
                rhs.append(-b[p][p] if p == r else -(b[p][r] + b[r][p]))
    return Matrix(rows, space.domain, cols=space.dim_h * n), tuple(rhs)


def certify_go_linear(space, logger=None):
    """Solves for a linear section ``L: m -> h`` of the projection.

    Success certifies the GO property for `space` and for its crown, as the
    identity holds coefficient-wise. Failure is inconclusive.

    Returns (GoVerdict or None): certified verdict holding ``graph_map``.

    """
    logger = logger or getLogger(__name__)
    if not space.dim_m:
        return GoVerdict(space.name, CERTIFIED, graph_map=Matrix.zeros(
            space.dim_h, 0, space.domain))
    a, b = linear_section_system(space)
    solution = solve_linear(a, b)
    if solution is None:
        logger.debug('{}: no linear section'.format(space.name))
        return None
    n = space.dim_m
    graph_map = Matrix([solution[r * n:(r + 1) * n]
                        for r in range(space.dim_h)], space.domain, cols=n)
    logger.info('{}: linear section found'.format(space.name))
    return GoVerdict(space.name, CERTIFIED, graph_map=graph_map)


def is_linear_section(space, graph_map):
    """Checks the coefficient identity for a given ``L`` without solving."""
    graph_map = graph_map.convert(space.domain)
    a, b = linear_section_system(space)
    return a.dot(graph_map.entries) == b


def verify_graph_map(space, graph_map, n=DEFAULT_CERTIFICATE_SAMPLES,
                     seed=DEFAULT_SEED, bound=DEFAULT_BOUND):
    """Counts seeded ``xi`` with ``(xi, L xi, 0)`` off the moduli variety.

    Returns (int): number of violations, 0 for a sound certificate.

    """
    graph_map = graph_map.convert(space.domain)
    violations = 0
    for i in range(n if space.dim_m else 0):
        xi = random_m_vector(space, seed, CERTIFICATE_STREAM, i, bound)
        point = ModuliPoint(space, xi, graph_map.dot(xi), 0)
        if not omega_member(space, point):
            violations += 1
    return violations


def sample_go(space, n=DEFAULT_NUM_SAMPLES, seed=DEFAULT_SEED,
              bound=DEFAULT_BOUND, n_jobs=None, show_progress=False,
              logger=None):
    """Tests `n` seeded vectors after the enumeration prefix.

    Over a Gaussian space the samples start with the null vectors built by
    :func:`null_vectors`, which exercise the ``c`` unknown; the remainder are
    random Gaussian integer vectors.

    Args:
        space (ReductiveSpace): validated space.
        n (int): number of samples, at least 1.
        seed (int): random seed.
        bound (int): coordinate bound.
        n_jobs (int or None): worker count.
        show_progress (bool): show a progress bar.
        logger:

    Returns (GoVerdict): refuted on the first failure, else
        sampled_consistent.

    """
    logger = logger or getLogger(__name__)
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    if not space.dim_m:
        return GoVerdict(space.name, SAMPLED, seed=seed,
                         extra={'enumerated': 0, 'null': 0})
    prefix = enumeration_prefix(space)
    nulls = null_vectors(space)[:n]
    randoms = [random_m_vector(space, seed, SAMPLE_STREAM, i, bound)
               for i in range(n - len(nulls))]
    extra = {'enumerated': len(prefix), 'null': len(nulls)}
    if not space.is_rational() and not nulls:
        extra['null_skipped'] = True
        logger.info('{}: no null vectors in the enumeration prefix'
                    .format(space.name))
    vectors = prefix + nulls + randoms
    found = _scan(space, vectors, n_jobs=n_jobs, show_progress=show_progress)
    if found is not None:
        index, ranks = found
        return GoVerdict(space.name, REFUTED, witness=vectors[index],
                         ranks=ranks, tested=max(0, index + 1 - len(prefix)),
                         failed=1, seed=seed, extra=extra)
    return GoVerdict(space.name, SAMPLED, tested=n, failed=0, seed=seed,
                     extra=extra)


def check_go(space, mode='auto', samples=DEFAULT_NUM_SAMPLES,
             seed=DEFAULT_SEED, bound=DEFAULT_BOUND,
             verify_samples=DEFAULT_CERTIFICATE_SAMPLES, n_jobs=None,
             show_progress=False, logger=None):
    """GO verdict in the requested mode.

    'auto' tries certification, then refutation, then sampling. A
    certificate is re-verified on `verify_samples` seeded vectors, whose
    count appears in the verdict's samples.

    Returns (GoVerdict): verdict. 'certify' alone yields 'inconclusive' when
        no linear section exists.

    """
    if mode not in GO_MODES:
        raise ValueError('mode must be one of {}, got {}'
                         .format(GO_MODES, mode))
    logger = logger or getLogger(__name__)
    if not space.dim_m:
        # every xi in a trivial m is zero, so the property holds vacuously
        logger.info('{}: m is trivial, GO holds'.format(space.name))
        verdict = certify_go_linear(space, logger=logger)
        verdict.seed = seed
        return verdict
    if mode in ('auto', 'certify'):
        verdict = certify_go_linear(space, logger=logger)
        if verdict is not None:
            verdict.tested = verify_samples
            verdict.failed = verify_graph_map(
                space, verdict.graph_map, n=verify_samples, seed=seed,
                bound=bound)
            verdict.seed = seed
            if verdict.failed:
                logger.error('{}: certificate failed {} re-verification '
                             'samples'.format(space.name, verdict.failed))
            return verdict
        if mode == 'certify':
            return GoVerdict(space.name, INCONCLUSIVE, seed=seed)
    if mode in ('auto', 'refute'):
        verdict = refute_go(space, budget=samples, seed=seed, bound=bound,
                            n_jobs=n_jobs, show_progress=show_progress,
                            logger=logger)
        if verdict is not None:
            return verdict
        if mode == 'refute':
            prefix = len(enumeration_prefix(space))
            return GoVerdict(space.name, SAMPLED, tested=samples, seed=seed,
                             extra={'enumerated': prefix})
    return sample_go(space, n=samples, seed=seed, bound=bound, n_jobs=n_jobs,
                     show_progress=show_progress, logger=logger)


def _random_point(space, seed, index, bound):
    random_state = get_random_state(seed, REALFORM_STREAM, index)
    while True:
        xi = space.convert_vector(
            random_integers(random_state, space.dim_m, bound))
        if any(xi):
            break
    point = None
    if index % 2 == 0:
        point = solve_geodesic_vector(space, xi)
    if point is None:
        alpha = random_integers(random_state, space.dim_h, bound)
        c = 0
        if not space.metric_eval(xi, xi):
            c = random_integers(random_state, 1, bound)[0]
        point = ModuliPoint(space, xi, alpha, c)
    return point


def check_omega_realform(space, n=DEFAULT_NUM_SAMPLES, seed=DEFAULT_SEED,
                         bound=DEFAULT_BOUND, logger=None):
    """Compares real and crown membership on sampled real points.

    Even-indexed samples are solved onto the variety where possible, the
    others get random ``alpha``, so members and non-members both occur.
    A discrepancy is a point whose membership or ``phi`` values differ
    between `space` and its crown.

    Returns (dict): report with the discrepancy count (expected 0).

    """
    from gospace.family.crown import complexify

    logger = logger or getLogger(__name__)
    if not space.is_rational():
        raise ValueError('{} is not a rational space'.format(space.name))
    if not space.dim_m:
        n = 0
    crown = complexify(space)
    members = discrepancies = 0
    for i in range(n):
        point = _random_point(space, seed, i, bound)
        crown_point = ModuliPoint(crown, point.xi, point.alpha, point.c)
        real = omega_member(space, point)
        members += int(real)
        same_values = all(
            crown.domain.convert_from(phi(space, point, zeta), space.domain)
            == phi(crown, crown_point, zeta)
            for zeta in (space.m_basis_vector(j) for j in range(space.dim_m)))
        if real != omega_member(crown, crown_point) or not same_values:
            discrepancies += 1
    if discrepancies:
        logger.error('{}: {} real/crown discrepancies'
                     .format(space.name, discrepancies))
    return {'space': space.name, 'samples': n, 'members': members,
            'non_members': n - members, 'discrepancies': discrepancies,
            'seed': seed}


def _go_status(space, budget, seed, bound, n_jobs, logger):
    certified = certify_go_linear(space, logger=logger)
    refuted = refute_go(space, budget=budget, seed=seed, bound=bound,
                        n_jobs=n_jobs, logger=logger)
    if certified is not None:
        verdict = certified
    elif refuted is not None:
        verdict = refuted
    else:
        verdict = sample_go(space, n=max(1, budget), seed=seed, bound=bound,
                            n_jobs=n_jobs, logger=logger)
        if verdict.is_refuted:
            refuted = verdict
    status = {'mode': verdict.mode,
              'certified': certified is not None,
              'refuted': refuted is not None}
    if refuted is not None:
        status['witness'] = refuted.to_dict()['witness']
    if certified is not None:
        status['graph_map'] = certified.graph_map.tolist()
    return status


def check_crown_go_consistency(space, budget=DEFAULT_NUM_SAMPLES,
                               seed=DEFAULT_SEED, bound=DEFAULT_BOUND,
                               n_jobs=None, logger=None):
    """Runs certification, refutation and sampling on a space and its crown.

    A refutation on one side with a certificate on the other (or both on
    the same side) is a theorem violation. A refutation facing a mere
    sampling pass is a sampling escape.

    Returns (dict): report with ``violation`` (bool), ``violations`` and
        ``sampling_escapes``.

    """
    from gospace.family.crown import complexify

    logger = logger or getLogger(__name__)
    if not space.is_rational():
        raise ValueError('{} is not a rational space'.format(space.name))
    crown = complexify(space)
    sides = (('real', space), ('crown', crown))
    status = dict((label, _go_status(s, budget, seed, bound, n_jobs, logger))
                  for label, s in sides)
    violations = []
    escapes = []
    for label, other in (('real', 'crown'), ('crown', 'real')):
        mine, theirs = status[label], status[other]
        if mine['certified'] and mine['refuted']:
            violations.append('{} side is both certified and refuted'
                              .format(label))
        if mine['refuted'] and theirs['certified']:
            violations.append('{} side refuted while {} side certified'
                              .format(label, other))
        if mine['refuted'] and theirs['mode'] == SAMPLED:
            escapes.append('{} side refuted, {} side passed sampling'
                           .format(label, other))
    for v in violations:
        logger.error('THEOREM VIOLATION on {}: {}'.format(space.name, v))
    return {'space': space.name,
            'real': status['real'],
            'crown': status['crown'],
            'violation': bool(violations),
            'violations': violations,
            'sampling_escapes': escapes}
