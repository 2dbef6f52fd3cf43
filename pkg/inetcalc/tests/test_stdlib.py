# standard library imports
import math
import itertools

from unittest import TestCase

# package imports
from inetcalc.model import InetError, SignatureError, Agent, Signature, SymbolInfo, ERASER, DUPLICATOR
from inetcalc.calculus import reduce
from inetcalc.graph import config_to_net, graph_reduce
from inetcalc.parser import parse_rule
from inetcalc import stdlib
from inetcalc.stdlib import load_profile, profile_names, schema_rules
from inetcalc.stdlib import denote_nat, denote_bool, denote_list, denote_dlist, denote_cnat
from inetcalc._util import ReductionTestCase


def interleaved(first, second):
    if not first:
        return list(second)
    return [first[0]] + interleaved(second, first[1:])


class TestNumbers(ReductionTestCase):

    def setUp(self):
        self.profile = load_profile('nat')

    def evaluate(self, configuration) -> int:
        outcome = reduce(configuration, self.profile.ruleset)
        self.assertOutcome(outcome, 'Normal')
        return denote_nat(outcome.configuration)

    def test_numeral(self):
        self.assertEqual(Agent('S', (Agent('S', (Agent('Z'), )), )), stdlib.numeral(2))
        self.assertEqual(4, denote_nat(stdlib.numeral(4)))

    def test_arithmetic(self):
        for m, n in itertools.product(range(7), repeat=2):
            self.assertEqual(m + n, self.evaluate(stdlib.add(m, n)), 'add {} {}'.format(m, n))
            self.assertEqual(m * n, self.evaluate(stdlib.mult(m, n)), 'mult {} {}'.format(m, n))
            self.assertEqual(max(m, n), self.evaluate(stdlib.maximum(m, n)), 'max {} {}'.format(m, n))
            self.assertEqual(min(m, n), self.evaluate(stdlib.minimum(m, n)), 'min {} {}'.format(m, n))

    def test_addition_is_linear_in_the_first_argument(self):
        for m in range(7):
            outcome = reduce(stdlib.add(m, 3), self.profile.ruleset)
            self.assertEqual(m + 1, outcome.stats.interactions)

    def test_factorial(self):
        for n in range(5):
            self.assertEqual(math.factorial(n), self.evaluate(stdlib.fact(n)))

        outcome = graph_reduce(config_to_net(stdlib.fact(5), self.profile.signature), self.profile.ruleset)
        self.assertEqual(120, denote_nat(outcome.configuration))

    def test_zero_test(self):
        outcome = reduce(stdlib.zero_test(0), self.profile.ruleset)
        self.assertTrue(denote_bool(outcome.configuration))
        for n in range(1, 4):
            outcome = reduce(stdlib.zero_test(n), self.profile.ruleset)
            self.assertFalse(denote_bool(outcome.configuration))

    def test_builders(self):
        self.assertAlphaEqual(stdlib.add(1, 1), self.profile.nets['one_plus_one'])
        self.assertAlphaEqual(stdlib.mult(2, 3), self.profile.nets['two_times_three'])
        self.assertEqual(stdlib.add(2, 2), self.profile.build('add', 2, 2))
        with self.assertRaises(InetError):
            self.profile.build('subtract', 2, 1)

    def test_denotation_errors(self):
        with self.assertRaises(InetError):
            denote_nat(self.parse('< S(x) | >'))
        with self.assertRaises(InetError):
            denote_nat(self.parse('< S(Z), Z | >'))
        with self.assertRaises(InetError):
            denote_bool(self.parse('< Z | >'))


class TestBooleans(TestCase):

    def setUp(self):
        self.profile = load_profile('bool')

    def evaluate(self, configuration) -> bool:
        outcome = reduce(configuration, self.profile.ruleset)
        self.assertEqual('Normal', outcome.variant)
        return denote_bool(outcome.configuration)

    def test_operations(self):
        for a, b in itertools.product((True, False), repeat=2):
            self.assertEqual(a and b, self.evaluate(stdlib.conjunction(a, b)))
            self.assertEqual(a or b, self.evaluate(stdlib.disjunction(a, b)))
            self.assertEqual(a == b, self.evaluate(stdlib.same(a, b)))
        self.assertFalse(self.evaluate(stdlib.negation(True)))
        self.assertTrue(self.evaluate(stdlib.negation(False)))

    def test_folds(self):
        for values in itertools.product((True, False), repeat=3):
            self.assertEqual(all(values), self.evaluate(stdlib.conjunction(*values)))
            self.assertEqual(any(values), self.evaluate(stdlib.disjunction(*values)))
        self.assertTrue(self.evaluate(stdlib.conjunction(True)))
        with self.assertRaises(InetError):
            stdlib.conjunction()

    def test_true_and_false_and_true(self):
        outcome = reduce(self.profile.nets['true_and_false_and_true'], self.profile.ruleset)
        self.assertFalse(denote_bool(outcome.configuration))
        self.assertEqual(3, outcome.stats.interactions)


class TestLists(ReductionTestCase):

    def setUp(self):
        self.profile = load_profile('dlist')

    def test_difference_list(self):
        self.assertAlphaEqual('< [#1, #2] | >', self.profile.build('dlist', 1, 2))
        self.assertEqual([1, 2], denote_dlist(stdlib.dlist([1, 2])))
        self.assertEqual([], denote_dlist(stdlib.dlist([])))

    def test_append_in_constant_time(self):
        for first, second in itertools.product([[], [1], [1, 2], [3, 1, 4, 1]], repeat=2):
            outcome = reduce(stdlib.dlist_append(first, second), self.profile.ruleset)
            self.assertOutcome(outcome, 'Normal', interactions=2)
            self.assertEqual(first + second, denote_dlist(outcome.configuration))

    def test_append_example(self):
        outcome = reduce(self.profile.nets['append_example'], self.profile.ruleset)
        self.assertEqual([1, 2, 3], denote_dlist(outcome.configuration))

    def test_classic_append(self):
        for first, second in itertools.product([[], [1], [1, 2], [3, 1, 4]], repeat=2):
            outcome = reduce(stdlib.append(first, second), self.profile.ruleset)
            self.assertOutcome(outcome, 'Normal', interactions=len(first) + 1)
            self.assertEqual(first + second, denote_list(outcome.configuration))

    def test_interleave(self):
        for first, second in itertools.product([[], [1], [1, 3], [5, 7, 9]], [[], [2], [2, 4, 6]]):
            outcome = reduce(stdlib.interleave(first, second), self.profile.ruleset)
            self.assertEqual(interleaved(first, second), denote_list(outcome.configuration))

        outcome = reduce(self.profile.nets['interleave_example'], self.profile.ruleset)
        self.assertEqual([0, 1, 2, 3, 4], denote_list(outcome.configuration))

    def test_items_may_be_terms(self):
        outcome = reduce(stdlib.append([Agent('Nil')], [2]), self.profile.ruleset)
        self.assertEqual([Agent('Nil'), 2], denote_list(outcome.configuration))


class TestCombinators(ReductionTestCase):

    def setUp(self):
        self.profile = load_profile('lambda')

    def test_encoding(self):
        self.assertAlphaEqual('< K0 | >', stdlib.combinator('K'))
        self.assertAlphaEqual('< a | App(K0, a) = S0 >', stdlib.combinator(('S', 'K')))
        self.assertAlphaEqual('< b | App(K0, a) = S0, App(K0, b) = a >', stdlib.combinator(('S', 'K', 'K')))
        self.assertAlphaEqual('< a | App(#2, a) = K0 >', stdlib.combinator(('K', 2)))
        with self.assertRaises(InetError):
            stdlib.combinator('I')

    def test_combinator_arities(self):
        signature = self.profile.signature
        arities = {symbol: signature.arity(symbol) for symbol in ('K0', 'K1', 'S0', 'S1', 'S2', 'App')}
        self.assertEqual({'K0': 0, 'K1': 1, 'S0': 0, 'S1': 1, 'S2': 2, 'App': 2}, arities)

    def test_skk_is_the_identity(self):
        for argument in ('K', 'S', 3):
            outcome = reduce(stdlib.combinator(('S', 'K', 'K', argument)), self.profile.ruleset)
            self.assertOutcome(outcome, 'Normal', stdlib.combinator(argument))

    def test_k_drops_its_second_argument(self):
        outcome = reduce(stdlib.combinator(('K', 1, 2)), self.profile.ruleset)
        self.assertEqual(1, denote_nat(outcome.configuration))

    def test_shipped_nets(self):
        outcome = reduce(self.profile.nets['identity_application'], self.profile.ruleset)
        self.assertOutcome(outcome, 'Normal', '< Lam(y, y) | >', interactions=1)

        outcome = reduce(self.profile.nets['skk'], self.profile.ruleset)
        self.assertOutcome(outcome, 'Normal', '< K0 | >')

    def test_comb_profile(self):
        comb = load_profile('comb')
        for name, expected in [('annihilate_dup', '< a, b, a, b | >'),
                               ('annihilate_gam', '< a, b, b, a | >'),
                               ('erase_gam', '< Eps, Eps | >'),
                               ('erase_eps', '< | >')]:
            outcome = reduce(comb.nets[name], comb.ruleset)
            self.assertOutcome(outcome, 'Normal', expected, interactions=1)

        outcome = reduce(comb.nets['commute'], comb.ruleset)
        self.assertOutcome(outcome, 'Normal', '< Dup(p, q), Dup(r, s), Gam(p, r), Gam(q, s) | >', interactions=1)


class TestConstantTimeNumbers(TestCase):

    def test_addition(self):
        profile = load_profile('cnat')
        for m, n in itertools.product(range(9), repeat=2):
            outcome = reduce(stdlib.cadd(m, n), profile.ruleset)
            self.assertEqual('Normal', outcome.variant)
            self.assertEqual(m + n, denote_cnat(outcome.configuration))
            self.assertEqual(2, outcome.stats.interactions)
            self.assertLessEqual(outcome.stats.total, 12)

    def test_shipped_net(self):
        profile = load_profile('cnat')
        outcome = reduce(profile.nets['two_plus_three'], profile.ruleset)
        self.assertEqual(5, denote_cnat(outcome.configuration))
        self.assertEqual(3, denote_cnat(stdlib.cnumber(3)))


class TestSchemaRules(TestCase):

    def test_nat_signature(self):
        signature = load_profile('nat').signature
        rules, diagnostics = schema_rules(signature)

        # Eps against all 14 symbols, Dup against the 13 others and itself
        self.assertEqual(27, len(rules))
        self.assertEqual([], diagnostics)
        printed = [str(rule) for rule in rules]
        self.assertIn('Eps >< S[Eps]', printed)
        self.assertIn('Eps >< Z', printed)
        self.assertIn('Dup[S(x1),S(y1)] >< S[Dup(x1,y1)]', printed)
        self.assertIn('Dup[Z,Z] >< Z', printed)

    def test_explicit_rule_shadows_the_schema(self):
        signature = Signature({'Eps': SymbolInfo(0, ERASER), 'Dup': SymbolInfo(2, DUPLICATOR)})
        rules, diagnostics = schema_rules(signature, [parse_rule('Dup[x, y] >< Dup[x, y]')])
        self.assertEqual([('Dup', 'Eps'), ('Eps', 'Eps')], [rule.key for rule in rules])
        self.assertEqual(1, len(diagnostics))
        self.assertIn('Dup[x,y] >< Dup[x,y]', diagnostics[0])

    def test_plain_signature(self):
        self.assertEqual(([], []), schema_rules(load_profile('comb').signature))


class TestProfiles(ReductionTestCase):

    def test_all_profiles_validate(self):
        self.assertEqual(['amb', 'bool', 'cnat', 'comb', 'dlist', 'endless', 'lambda', 'nat'], profile_names())
        for name in profile_names():
            profile = load_profile(name)
            self.assertEqual([], profile.validate(), name)
            self.assertTrue(profile.nets, name)

    def test_merge(self):
        merged = load_profile('nat').merge(load_profile('bool'))
        self.assertEqual('nat+bool', merged.name)
        self.assertIn('Same', merged.signature)
        self.assertIn('Fact', merged.signature)
        self.assertIn('and', merged.builders)

        outcome = reduce(self.parse('< r | ZeroTest(a) = #0, Not(r) = a >'), merged.ruleset)
        self.assertFalse(denote_bool(outcome.configuration))

    def test_conflicting_attributes(self):
        with self.assertRaises(SignatureError):
            load_profile('nat').merge(load_profile('comb'))

    def test_unknown_profile(self):
        with self.assertRaises(InetError):
            load_profile('nonexistent')
