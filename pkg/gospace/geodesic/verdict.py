from gospace.exactla.scalar import format_scalar

REFUTED = 'refuted'
SAMPLED = 'sampled_consistent'
CERTIFIED = 'certified_linear'
INCONCLUSIVE = 'inconclusive'

LINEAR_CERTIFICATE_CAVEAT = (
    'linear certificate uses c = 0 only; null geodesics needing c != 0 and '
    'nonlinear graph maps are not covered, so failure to certify is '
    'inconclusive')


class GoVerdict(object):
    """Outcome of a geodesic orbit check.

    Args:
        space_name (str): name of the analyzed space.
        mode (str): one of 'refuted', 'sampled_consistent',
            'certified_linear' or 'inconclusive'.
        witness (tuple or None): ``m`` vector with an inconsistent geodesic
            system (refuted only).
        ranks (tuple or None): ``(rank([A|b]), rank(A))`` for the witness.
        tested (int): number of vectors tested.
        failed (int): number of failing vectors.
        seed (int): seed of the random part.
        graph_map (Matrix or None): ``L: m -> h`` (certified only).
        extra (dict or None): additional sample counters.

    """

    def __init__(self, space_name, mode, witness=None, ranks=None, tested=0,
                 failed=0, seed=0, graph_map=None, extra=None):
        self.space_name = space_name
        self.mode = mode
        self.witness = witness
        self.ranks = ranks
        self.tested = tested
        self.failed = failed
        self.seed = seed
        self.graph_map = graph_map
        self.extra = extra or {}

    @property
    def is_refuted(self):
        return self.mode == REFUTED

    @property
    def is_certified(self):
        return self.mode == CERTIFIED

    def to_dict(self):
        result = {'space': self.space_name, 'mode': self.mode}
        if self.witness is not None:
            result['witness'] = [format_scalar(v) for v in self.witness]
        if self.ranks is not None:
            result['ranks'] = {'augmented': self.ranks[0],
                               'coefficient': self.ranks[1]}
        samples = {'tested': self.tested, 'failed': self.failed,
                   'seed': self.seed}
        samples.update(self.extra)
        result['samples'] = samples
        if self.graph_map is not None:
            result['graph_map'] = self.graph_map.tolist()
        if self.mode in (CERTIFIED, INCONCLUSIVE):
            result['caveat'] = LINEAR_CERTIFICATE_CAVEAT
        return result

    def __repr__(self):
        return 'GoVerdict({!r}, {!r})'.format(self.space_name, self.mode)
