# third party imports
import demjson3
from hypothesis import given, settings

# package imports
from inetcalc.model import RuleSet, Signature
from inetcalc.calculus import reduce
from inetcalc.graph import PortNet, GraphError, AmbError, HEAD
from inetcalc.graph import config_to_net, net_to_config, graph_reduce, parallel_round, parallel_reduce, rewrite
from inetcalc.graph import interface_endpoint, is_head_normal
from inetcalc.stdlib import nat_profile, load_profile, load_system_profile, parallel_or, parallel_and, add, mult, fact
from inetcalc.tests.generators import SIGNATURE, configurations, administrative_normal_form
from inetcalc._util import ReductionTestCase


class TestConversion(ReductionTestCase):

    def test_encode_example(self):
        configuration = self.parse('< x | Add(Z, x) = S(Z) >')
        net = config_to_net(configuration, nat_profile().signature)

        self.assertEqual(['Add', 'S', 'Z', 'Z'], sorted(net.nodes.values()))
        pairs = net.active_pairs()
        self.assertEqual(1, len(pairs))
        self.assertEqual({'Add', 'S'}, {net.nodes[endpoint[0]] for endpoint in pairs[0]})

        # The single interface port is the second auxiliary port of Add
        self.assertEqual(1, len(net.interface))
        node, port = net.interface[0]
        self.assertEqual(('Add', 2), (net.nodes[node], port))
        self.assertEqual([], net.violations())

        self.assertAlphaEqual(configuration, net_to_config(net))

    def test_system_of_links(self):
        net = config_to_net(self.parse('< x, x | >'))
        self.assertEqual(0, len(net))
        self.assertEqual([interface_endpoint(1), interface_endpoint(0)], net.interface)
        self.assertAlphaEqual('< x, x | >', net_to_config(net))

    def test_free_names_become_labelled_ports(self):
        configuration = self.parse('< S(x) | y = Z >')
        net = config_to_net(configuration)
        self.assertEqual([None, 'x', 'y'], net.labels)
        self.assertAlphaEqual(configuration, net_to_config(net))

    def test_cyclic_tree(self):
        configuration = self.parse('< x | y = Dup(S(x), y) >')
        net = config_to_net(configuration)
        self.assertEqual([], net.violations())
        self.assertAlphaEqual(configuration, net_to_config(net))

    def test_closed_loop_vanishes(self):
        net = config_to_net(self.parse('< S(Z) | x = y, y = x >'))
        self.assertAlphaEqual('< S(Z) | >', net_to_config(net))

    @settings(max_examples=500, deadline=None)
    @given(configurations(agent_sides=True))
    def test_roundtrip(self, configuration):
        configuration = administrative_normal_form(configuration)
        net = config_to_net(configuration, SIGNATURE)
        self.assertEqual([], net.violations())
        self.assertAlphaEqual(configuration, net_to_config(net))


class TestJson(ReductionTestCase):

    def test_format(self):
        net = config_to_net(self.parse('< x | Add(Z, x) = S(Z) >'), nat_profile().signature)
        data = demjson3.decode(net.to_json())

        self.assertEqual({'nodes', 'wires', 'interface'}, set(data.keys()))
        self.assertEqual(4, len(data['nodes']))
        self.assertEqual(3, len(data['wires']))
        self.assertEqual(1, len(data['interface']))
        node, port = data['interface'][0]
        self.assertEqual('Add', data['nodes'][node])
        self.assertEqual(2, port)

    def test_roundtrip(self):
        signature = nat_profile().signature
        for configuration in nat_profile().nets.values():
            net = config_to_net(configuration, signature)
            loaded = PortNet.from_json(net.to_json(), signature)
            self.assertEqual(net.nodes, loaded.nodes)
            self.assertEqual(net.links, loaded.links)
            self.assertAlphaEqual(configuration, net_to_config(loaded))

    def test_interface_links_and_free_names(self):
        net = config_to_net(self.parse('< x, x, S(y) | >'))
        data = net.to_json_data()
        self.assertEqual([['*', 1], ['*', 0], ['1', 0], ['1', 1]], data['interface'])
        self.assertEqual({'3': 'y'}, data['free_names'])
        self.assertAlphaEqual('< x, x, S(y) | >', net_to_config(PortNet.from_json_data(data, net.signature)))

    def test_invalid_net(self):
        text = '{"nodes": {"1": "S"}, "wires": [], "interface": [["1", 0]]}'
        with self.assertRaises(GraphError):
            PortNet.from_json(text, Signature.from_arities(S=1))


class TestGraphReduction(ReductionTestCase):

    def setUp(self):
        self.profile = nat_profile()

    def reduce_both(self, configuration, ruleset, signature):
        expected = reduce(configuration, ruleset)
        outcome = graph_reduce(config_to_net(configuration, signature), ruleset)
        self.assertOutcome(outcome, expected.variant, expected.configuration, expected.stats.interactions)
        return outcome

    def test_engines_agree_on_numbers(self):
        examples = [add(2, 3), mult(2, 3), fact(3)] + list(self.profile.nets.values())
        for configuration in examples:
            self.reduce_both(configuration, self.profile.ruleset, self.profile.signature)

    def test_engines_agree_on_shipped_nets(self):
        for name in ('bool', 'dlist', 'comb', 'lambda', 'cnat'):
            profile = load_profile(name)
            for configuration in profile.nets.values():
                self.reduce_both(configuration, profile.ruleset, profile.signature)

    def test_rewrite_keeps_the_interface(self):
        net = config_to_net(self.profile.nets['one_plus_one'], self.profile.signature)
        first, second = net.active_pairs()[0]
        rewrite(net, first, second, self.profile.ruleset)
        self.assertEqual([], net.violations())
        self.assertEqual(1, len(net.interface))

    def test_outcome_holds_the_net(self):
        outcome = graph_reduce(config_to_net(add(1, 1), self.profile.signature), self.profile.ruleset)
        self.assertEqual(['S', 'S', 'Z'], sorted(outcome.net.nodes.values()))
        self.assertTrue(is_head_normal(outcome.net))

    def test_limit(self):
        system = load_system_profile('endless')
        outcome = graph_reduce(config_to_net(system.net('endless'), system.signature), system.rules, limit=500)
        self.assertOutcome(outcome, 'LimitExceeded', interactions=500)
        self.assertEqual(2, len(outcome.net.interface))

    def test_blocked(self):
        configuration = self.parse('< r | ZeroTest(r) = T >')
        outcome = graph_reduce(config_to_net(configuration, self.profile.signature), self.profile.ruleset)
        self.assertOutcome(outcome, 'Blocked', configuration, interactions=0)
        self.assertEqual([{'T', 'ZeroTest'}], [set(pair) for pair in outcome.blocked])


class TestAmb(ReductionTestCase):

    def setUp(self):
        self.profile = load_profile('amb')

    def run_fair(self, configuration):
        net = config_to_net(configuration, self.profile.signature)
        return graph_reduce(net, self.profile.ruleset, fairness=True, limit=10000, strategy=HEAD)

    def test_parallel_or_with_divergent_argument(self):
        for configuration in (parallel_or(True, None), parallel_or(None, True)):
            outcome = self.run_fair(configuration)
            self.assertOutcome(outcome, 'HeadNormal')
            self.assertEqual('T', outcome.configuration.head[0].symbol)
            self.assertLess(outcome.stats.total, 10000)

    def test_shipped_nets(self):
        for name in ('parallel_or_true_endless', 'parallel_or_endless_true'):
            outcome = self.run_fair(self.profile.nets[name])
            self.assertEqual('T', outcome.configuration.head[0].symbol)

    def test_parallel_or_false_false(self):
        outcome = self.run_fair(parallel_or(False, False))
        self.assertOutcome(outcome, 'HeadNormal', '< F | >')

        net = config_to_net(parallel_or(False, False), self.profile.signature)
        outcome = graph_reduce(net, self.profile.ruleset, fairness=True)
        self.assertOutcome(outcome, 'Normal', '< F | >', interactions=2)

    def test_parallel_and_false_wins(self):
        outcome = self.run_fair(parallel_and(False, None))
        self.assertEqual('F', outcome.configuration.head[0].symbol)

    def test_calculus_reports_amb_as_blocked(self):
        outcome = reduce(parallel_or(False, False), self.profile.ruleset)
        self.assertOutcome(outcome, 'Blocked', interactions=0)

    def test_interface_is_kept(self):
        net = config_to_net(parallel_or(True, None), self.profile.signature)
        outcome = graph_reduce(net, self.profile.ruleset, fairness=True, limit=50)
        self.assertOutcome(outcome, 'LimitExceeded')
        self.assertEqual(len(net.interface), len(outcome.net.interface))
        self.assertEqual([], outcome.net.violations())


class TestParallel(ReductionTestCase):

    def test_one_plus_one(self):
        profile = nat_profile()
        net = config_to_net(profile.nets['one_plus_one'], profile.signature)
        result, rounds, rewrites = parallel_reduce(net, profile.ruleset)
        self.assertEqual((2, 2), (rounds, rewrites))
        self.assertEqual(['S', 'S', 'Z'], sorted(result.nodes.values()))

    def test_independent_pairs_in_one_round(self):
        profile = load_profile('comb')
        net = config_to_net(profile.nets['two_annihilations'], profile.signature)
        result, rewrites = parallel_round(net, profile.ruleset)
        self.assertEqual(2, rewrites)
        self.assertEqual(0, len(result))
        # The round works on a copy
        self.assertEqual(4, len(net))

    def test_parallel_equals_sequential(self):
        profile = nat_profile()
        for configuration in (add(2, 2), mult(2, 2), fact(3)):
            net = config_to_net(configuration, profile.signature)
            result, _, rewrites = parallel_reduce(net, profile.ruleset)
            outcome = reduce(configuration, profile.ruleset)
            self.assertEqual(outcome.stats.interactions, rewrites)
            self.assertAlphaEqual(outcome.configuration, net_to_config(result))

    def test_amb_is_rejected(self):
        profile = load_profile('amb')
        net = config_to_net(parallel_or(True, False), profile.signature)
        with self.assertRaises(AmbError):
            parallel_round(net, profile.ruleset)

    def test_pairs_without_rule_stay(self):
        net = config_to_net(nat_profile().nets['one_plus_one'], nat_profile().signature)
        result, rewrites = parallel_round(net, RuleSet(nat_profile().signature))
        self.assertEqual(0, rewrites)
        self.assertEqual(net.nodes, result.nodes)
