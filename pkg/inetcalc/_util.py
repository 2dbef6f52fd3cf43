# standard library
from typing import Any, Union

from unittest import TestCase


def value_or_default(dictionary: dict, key: str, default: Any):
    """
    Either returns the item of the "dictionary" corresponding to the given "key" or the given default value, if no
    such key exists within the dict.

    CHANGELOG

    Added 09.10.2026

    :param dictionary:
    :param key:
    :param default:
    :return:
    """
    if key in dictionary.keys():
        return dictionary[key]
    else:
        return default

# ###########
# FOR TESTING
# ###########


class ReductionTestCase(TestCase):
    """
    The base class for the TestCases, which compare configurations. Configurations are compared up to the renaming of
    their bound names, so the assertions print both configurations in the canonical format when they fail.

    CHANGELOG

    Added 14.10.2026
    """
    def parse(self, text: str):
        # Imported here, the package modules import this module themselves
        from inetcalc.parser import parse_configuration
        return parse_configuration(text, allow_reserved=True)

    def as_configuration(self, configuration):
        return self.parse(configuration) if isinstance(configuration, str) else configuration

    def assertAlphaEqual(self, first: Union[str, Any], second: Union[str, Any]):
        from inetcalc.model import alpha_equal
        first = self.as_configuration(first)
        second = self.as_configuration(second)
        if not alpha_equal(first, second):
            self.fail('{} is not alpha equal to {}'.format(first, second))

    def assertNotAlphaEqual(self, first: Union[str, Any], second: Union[str, Any]):
        from inetcalc.model import alpha_equal
        first = self.as_configuration(first)
        second = self.as_configuration(second)
        if alpha_equal(first, second):
            self.fail('{} is alpha equal to {}'.format(first, second))

    def assertOutcome(self, outcome, variant: str, configuration=None, interactions=None):
        self.assertEqual(variant, outcome.variant, 'outcome {}: {}'.format(outcome.variant, outcome.configuration))
        if configuration is not None:
            self.assertAlphaEqual(configuration, outcome.configuration)
        if interactions is not None:
            self.assertEqual(interactions, outcome.stats.interactions)
