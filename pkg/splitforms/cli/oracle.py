"""
Numeric corroboration of symbolic verdicts: both sides of a claim are evaluated exactly at
deterministic pseudo-random rational points, skipping points where a coefficient has a pole.
"""
import logging
import random
from collections import namedtuple
from fractions import Fraction
from itertools import islice

from splitforms.cli.printer import format_point, format_value
from splitforms.common.settings import OracleSettings
from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.dynamics import PhaseFlow
from splitforms.kernel.exceptions import PoleException
from splitforms.kernel.exterior import GradedTensor

logger = logging.getLogger(__name__)

PointCheck = namedtuple('PointCheck', ['point', 'lhs_value', 'rhs_value'])


def evaluate_value(value, point):
    # type: (object, list) -> object
    """
    Exact value of a scalar, form, multivector or flow at a point.
    """
    if isinstance(value, (Polynomial, RationalFunction)):
        return value.evaluate(point)
    if isinstance(value, GradedTensor):
        return value.evaluate(point)
    if isinstance(value, PhaseFlow):
        return tuple(component.evaluate(point) for component in value.components)
    raise TypeError(u"Cannot evaluate {!r}".format(value))


def _print_evaluated(value):
    if isinstance(value, tuple):
        return u"({})".format(u", ".join(format_value(v) for v in value))
    return format_value(value)


class PointOracle(object):
    """
    Draws rational points from ``random.Random(seed)`` so that every run with the same settings checks the
    same points.
    """

    def __init__(self, settings=None, logger=None):
        # type: (OracleSettings, logging.Logger) -> None
        self.settings = settings or OracleSettings()
        self.logger = logger or logging.getLogger(__name__)

    def _random_rational(self, generator):
        bound = self.settings.numerator_bound
        return Fraction(generator.randint(-bound, bound), generator.randint(1, self.settings.denominator_bound))

    def draw(self, ambient_dim):
        """
        Distinct random points in Q^n; the sequence depends only on the seed and the dimension. Stops after
        ``max_attempts`` consecutive repeats, which only happens when the bounds leave few points.
        """
        generator = random.Random(self.settings.seed)
        seen = set()
        repeats = 0
        while repeats < self.settings.max_attempts:
            point = tuple(self._random_rational(generator) for _ in range(ambient_dim))
            if point in seen:
                repeats += 1
                continue
            repeats = 0
            seen.add(point)
            yield point

    def points(self, ambient_dim, count=None):
        # type: (int, int) -> list
        count = self.settings.points if count is None else count
        return list(islice(self.draw(ambient_dim), count))

    def check(self, lhs, rhs, ambient_dim):
        # type: (object, object, int) -> list
        """
        Evaluate both sides at ``settings.points`` distinct points where neither side has a pole.
        :return: list of PointCheck with printed values
        """
        wanted = self.settings.points
        skipped = 0
        checks = []
        for point in self.draw(ambient_dim):
            if len(checks) == wanted or skipped > self.settings.max_attempts * max(wanted, 1):
                break
            try:
                left = evaluate_value(lhs, point)
                right = evaluate_value(rhs, point)
            except PoleException as exc:
                self.logger.warning("Skipping point %s: %s", format_point(point), exc)
                skipped += 1
                continue
            checks.append(PointCheck(format_point(point), _print_evaluated(left), _print_evaluated(right)))
        if len(checks) < wanted:
            self.logger.warning("Only %s of %s pole-free points found", len(checks), wanted)
        return checks


def checks_agree(checks, equal):
    # type: (list, bool) -> bool
    """
    A true claim needs every point to agree; a false claim needs at least one point that separates the sides.
    """
    matches = [check.lhs_value == check.rhs_value for check in checks]
    if equal:
        return all(matches)
    return not all(matches)
