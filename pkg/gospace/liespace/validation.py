from logging import getLogger

from gospace.exactla.matrix import rank


class ValidationReport(object):
    """Result of :func:`validate`.

    Each failure is a dict with the failed ``check``, a ``witness`` index
    tuple and a human readable ``detail``.
    """

    def __init__(self, space_name):
        self.space_name = space_name
        self.failures = []

    def add(self, check, witness, detail):
        self.failures.append({'check': check,
                              'witness': list(witness),
                              'detail': detail})

    @property
    def ok(self):
        return not self.failures

    def failed_checks(self):
        return sorted(set(f['check'] for f in self.failures))

    def to_dict(self):
        return {'space': self.space_name,
                'valid': self.ok,
                'failures': list(self.failures)}


def _check_antisymmetry(space, report):
    for i in range(space.dim):
        for j in range(i, space.dim):
            for k in range(space.dim):
                c_ij = space.structure_constant(i, j, k)
                if c_ij != -space.structure_constant(j, i, k):
                    report.add('antisymmetry', (i, j, k),
                               'c(i,j,k) != -c(j,i,k)')


def _check_jacobi(space, report):
    e = space.basis_vector
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            for k in range(j + 1, space.dim):
                terms = (space.bracket(e(i), space.bracket(e(j), e(k))),
                         space.bracket(e(j), space.bracket(e(k), e(i))),
                         space.bracket(e(k), space.bracket(e(i), e(j))))
                total = [a + b + c for a, b, c in zip(*terms)]
                if any(total):
                    report.add('jacobi', (i, j, k),
                               'Jacobi identity fails on ({}, {}, {})'
                               .format(*[space.basis_labels[t]
                                         for t in (i, j, k)]))


def _check_reductive(space, report):
    e = space.basis_vector
    for a in space.isotropy:
        for b in space.isotropy:
            if a >= b:
                continue
            m_part = space.to_m(space.bracket(e(a), e(b)))
            for p, v in enumerate(m_part):
                if v:
                    report.add('subalgebra', (a, b, space.complement[p]),
                               '[h, h] has a component along m')
                    break
        for k in space.complement:
            h_part = space.to_h(space.bracket(e(a), e(k)))
            for p, v in enumerate(h_part):
                if v:
                    report.add('reductive', (a, k, space.isotropy[p]),
                               '[h, m] has a component along h')
                    break


def _check_metric(space, report):
    q = space.metric
    for p in range(q.rows):
        for r in range(p + 1, q.cols):
            if q[p, r] != q[r, p]:
                report.add('metric_symmetric', (p, r),
                           'metric is not symmetric')
    if rank(q) != space.dim_m:
        report.add('metric_nondegenerate', (), 'metric is degenerate')


def _check_invariance(space, report):
    m_dim = space.dim_m
    for a in range(space.dim_h):
        ad = space.ad_h(a)
        for p in range(m_dim):
            for r in range(p, m_dim):
                value = (space.metric_eval(ad.column(p),
                                           space.m_basis_vector(r)) +
                         space.metric_eval(space.m_basis_vector(p),
                                           ad.column(r)))
                if value:
                    report.add('invariance',
                               (space.isotropy[a], space.complement[p],
                                space.complement[r]),
                               'metric is not ad(h)-invariant')


def validate(space, logger=None):
    """Checks every structural invariant of `space` exactly.

    Antisymmetry, the Jacobi identity, ``[h, h] ⊆ h``, ``[h, m] ⊆ m``,
    symmetry and nondegeneracy of the metric and its infinitesimal
    ``ad(h)``-invariance are checked on basis elements. Failures are
    collected, never raised.

    Args:
        space (ReductiveSpace): space to check.
        logger:

    Returns (ValidationReport): report listing each failure with a witness.

    """
    logger = logger or getLogger(__name__)
    report = ValidationReport(space.name)
    _check_antisymmetry(space, report)
    _check_jacobi(space, report)
    _check_reductive(space, report)
    _check_metric(space, report)
    _check_invariance(space, report)
    if report.ok:
        logger.debug('{} passed validation'.format(space.name))
    else:
        logger.info('{} failed validation: {}'
                    .format(space.name, ', '.join(report.failed_checks())))
    return report
