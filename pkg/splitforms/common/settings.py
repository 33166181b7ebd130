"""
Run settings for the random-point oracle and the suite runner.
"""
import configparser
import logging

DEFAULT_SEED = 20240601
DEFAULT_POINTS = 20
DEFAULT_NUMERATOR_BOUND = 9
DEFAULT_DENOMINATOR_BOUND = 7
DEFAULT_MAX_ATTEMPTS = 50
DEFAULT_WORKERS = 1


class OracleSettings(object):
    """
    Seed and sizes for point checks, plus the thread count used to evaluate suite claims.
    """

    def __init__(self,
                 seed=DEFAULT_SEED,
                 points=DEFAULT_POINTS,
                 numerator_bound=DEFAULT_NUMERATOR_BOUND,
                 denominator_bound=DEFAULT_DENOMINATOR_BOUND,
                 max_attempts=DEFAULT_MAX_ATTEMPTS,
                 workers=DEFAULT_WORKERS,
                 logger=None):
        self.seed = int(seed)
        self.points = int(points)
        self.numerator_bound = int(numerator_bound)
        self.denominator_bound = int(denominator_bound)
        self.max_attempts = int(max_attempts)
        self.workers = max(1, int(workers))
        self.logger = logger or logging.getLogger(__name__)
        if self.points < 0 or self.numerator_bound < 1 or self.denominator_bound < 1 or self.max_attempts < 1:
            raise ValueError(u"Invalid oracle settings: points={}, bounds=({}, {}), max_attempts={}".format(
                self.points, self.numerator_bound, self.denominator_bound, self.max_attempts))

    @classmethod
    def from_config_file(cls, config_file):
        # type: (str) -> OracleSettings
        """
        Class method that creates an instance of this class from an INI file with [Oracle] and [Runner] sections.
        Missing keys keep their defaults.
        :param config_file: path to the settings file
        :return: an instance of this class
        """
        cfp = configparser.ConfigParser()
        with open(config_file) as cfg:
            cfp.read_file(cfg)
        kwargs = {}
        for section, key in (('Oracle', 'seed'), ('Oracle', 'points'), ('Oracle', 'numerator_bound'),
                             ('Oracle', 'denominator_bound'), ('Oracle', 'max_attempts'), ('Runner', 'workers')):
            if cfp.has_option(section, key):
                kwargs[key] = cfp.getint(section, key)
        settings = cls.from_config(**kwargs)
        settings.logger.debug("Loaded oracle settings from %s: %s", config_file, sorted(kwargs))
        return settings

    @classmethod
    def from_config(cls, **kwargs):
        # type: (...) -> OracleSettings
        return cls(**kwargs)

    def replace(self, **overrides):
        # type: (...) -> OracleSettings
        """Copy with the given fields replaced; None values are ignored."""
        values = dict(seed=self.seed, points=self.points, numerator_bound=self.numerator_bound,
                      denominator_bound=self.denominator_bound, max_attempts=self.max_attempts,
                      workers=self.workers)
        changed = {key: value for key, value in overrides.items() if value is not None}
        if changed:
            self.logger.debug("Overriding oracle settings: %s", changed)
        values.update(changed)
        return type(self)(logger=self.logger, **values)
