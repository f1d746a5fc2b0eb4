from gospace.liespace.reductive_space import DegenerateMetricError  # NOQA
from gospace.liespace.reductive_space import ReductiveSpace  # NOQA
from gospace.liespace.reductive_space import Tag  # NOQA
from gospace.liespace.reductive_space import TAG_NAMES  # NOQA
from gospace.liespace.reductive_space import UNKNOWN  # NOQA
from gospace.liespace.space_io import dump_space  # NOQA
from gospace.liespace.space_io import load_space  # NOQA
from gospace.liespace.space_io import parse_space  # NOQA
from gospace.liespace.space_io import save_space  # NOQA
from gospace.liespace.space_io import SpaceFormatError  # NOQA
from gospace.liespace.validation import validate  # NOQA
from gospace.liespace.validation import ValidationReport  # NOQA
