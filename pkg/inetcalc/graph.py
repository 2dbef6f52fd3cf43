# standard library imports
import logging
import itertools
from collections import defaultdict
from dataclasses import dataclass

from typing import Dict, Iterable, List, Optional, Set, Tuple

# third party imports
import demjson3

# package imports
from inetcalc.model import Agent, Name, Equation, Configuration, RuleSet, Signature, SymbolInfo, Term
from inetcalc.model import InetError, AMB, iter_agents
from inetcalc.calculus import Stats, Outcome, Normal, HeadNormal, Blocked, LimitExceeded
from inetcalc.calculus import SchedulerPolicy, Fifo, TraceCallback, DEFAULT_LIMIT, INTERACTION
from inetcalc._util import value_or_default


logger = logging.getLogger(__name__)

FULL = 'full'
HEAD = 'head'

# A port of a node: (node id, port number). Port 0 is the principal port. The ports of the interface are represented
# by the pseudo endpoints (-(index + 1), 0)
Endpoint = Tuple[int, int]


class GraphError(InetError):
    pass


class AmbError(InetError):
    pass


def interface_endpoint(index: int) -> Endpoint:
    return -(index + 1), 0


def interface_index(endpoint: Endpoint) -> int:
    return -endpoint[0] - 1


def is_interface(endpoint: Endpoint) -> bool:
    return endpoint[0] < 0


def signature_of(configuration: Configuration) -> Signature:
    # A signature of plain symbols with the arities as they are used in the configuration
    symbols = {}
    for term in configuration.terms():
        for agent in iter_agents(term):
            symbols[agent.symbol] = SymbolInfo(len(agent.args))
    return Signature(symbols)


# ########
# PORT NET
# ########

class PortNet:
    """
    A net as a graph of nodes with numbered ports. Every port of every node is linked to exactly one other port, which
    may be a port of the interface. Each interface port carries a label: None for the ports, which correspond to the
    head of a configuration, the name for ports, which stand for a free name.

    CHANGELOG

    Added 10.10.2026
    """
    def __init__(self, signature: Signature):
        self.signature = signature
        self.nodes: Dict[int, str] = {}
        self.links: Dict[Endpoint, Endpoint] = {}
        self.labels: List[Optional[str]] = []
        self._next_id = 1

    # -- building

    def add_node(self, symbol: str) -> int:
        node = self._next_id
        self._next_id += 1
        self.nodes[node] = symbol
        return node

    def add_interface(self, label: Optional[str] = None) -> Endpoint:
        self.labels.append(label)
        return interface_endpoint(len(self.labels) - 1)

    def connect(self, first: Endpoint, second: Endpoint):
        if first == second:
            raise GraphError('cannot link the port {} to itself'.format(first))
        self.links[first] = second
        self.links[second] = first

    def remove_node(self, node: int):
        for port in self.ports(node):
            peer = self.links.pop((node, port), None)
            if peer is not None and self.links.get(peer) == (node, port):
                del self.links[peer]
        del self.nodes[node]

    # -- queries

    def arity(self, node: int) -> int:
        return self.signature.arity(self.nodes[node])

    def ports(self, node: int) -> range:
        return range(self.arity(node) + 1)

    def peer(self, endpoint: Endpoint) -> Optional[Endpoint]:
        return self.links.get(endpoint)

    @property
    def interface(self) -> List[Optional[Endpoint]]:
        return [self.peer(interface_endpoint(index)) for index in range(len(self.labels))]

    def is_principal(self, endpoint: Endpoint) -> bool:
        if is_interface(endpoint) or endpoint[0] not in self.nodes:
            return False
        return endpoint[1] in self.signature.principal_ports(self.nodes[endpoint[0]])

    def is_amb(self, node: int) -> bool:
        return self.signature.attribute(self.nodes[node]) == AMB

    def active_pairs(self) -> List[Tuple[Endpoint, Endpoint]]:
        """
        Returns all the pairs of principal ports linked to each other, each pair ordered and the list sorted.

        CHANGELOG

        Added 10.10.2026

        :return:
        """
        pairs = []
        for first, second in self.links.items():
            if first < second and first[0] != second[0] and self.is_principal(first) and self.is_principal(second):
                pairs.append((first, second))
        return sorted(pairs)

    def violations(self) -> List[str]:
        messages = []
        for node, symbol in self.nodes.items():
            if symbol not in self.signature:
                messages.append('node {} has the undeclared symbol "{}"'.format(node, symbol))
                continue
            for port in self.ports(node):
                peer = self.links.get((node, port))
                if peer is None:
                    messages.append('port {} of node {} ({}) is not linked'.format(port, node, symbol))
                elif self.links.get(peer) != (node, port):
                    messages.append('the link of port {} of node {} is not symmetric'.format(port, node))
        for index in range(len(self.labels)):
            if self.peer(interface_endpoint(index)) is None:
                messages.append('interface port {} is not linked'.format(index))
        return messages

    def copy(self) -> 'PortNet':
        net = PortNet(self.signature)
        net.nodes = dict(self.nodes)
        net.links = dict(self.links)
        net.labels = list(self.labels)
        net._next_id = self._next_id
        return net

    def __len__(self):
        return len(self.nodes)

    # -- json

    def to_json_data(self) -> dict:
        """
        Returns the net as a dict of the JSON net format: the node symbols by id, the wires between node ports and for
        every interface port the node port it is linked to, or ["*", j] for a link to the interface port j.

        CHANGELOG

        Added 11.10.2026

        :return:
        """
        wires = []
        for first, second in sorted(self.links.items()):
            if first < second and not is_interface(first) and not is_interface(second):
                wires.append([[str(first[0]), first[1]], [str(second[0]), second[1]]])

        interface = []
        for peer in self.interface:
            if is_interface(peer):
                interface.append(['*', interface_index(peer)])
            else:
                interface.append([str(peer[0]), peer[1]])

        data = {
            'nodes':        {str(node): symbol for node, symbol in sorted(self.nodes.items())},
            'wires':        wires,
            'interface':    interface
        }
        free_names = {str(index): label for index, label in enumerate(self.labels) if label is not None}
        if free_names:
            data['free_names'] = free_names
        return data

    def to_json(self) -> str:
        return demjson3.encode(self.to_json_data())

    @classmethod
    def from_json_data(cls, data: dict, signature: Signature) -> 'PortNet':
        net = cls(signature)
        for key, symbol in data['nodes'].items():
            net.nodes[int(key)] = symbol
        net._next_id = max(net.nodes.keys(), default=0) + 1

        free_names = value_or_default(data, 'free_names', {})
        for index in range(len(data['interface'])):
            net.labels.append(free_names.get(str(index)))

        for index, (node, port) in enumerate(data['interface']):
            if node == '*':
                net.connect(interface_endpoint(index), interface_endpoint(port))
            else:
                net.connect(interface_endpoint(index), (int(node), port))
        for (first, first_port), (second, second_port) in data['wires']:
            net.connect((int(first), first_port), (int(second), second_port))

        messages = net.violations()
        if messages:
            raise GraphError('invalid net: {}'.format('; '.join(messages)))
        return net

    @classmethod
    def from_json(cls, text: str, signature: Signature) -> 'PortNet':
        return cls.from_json_data(demjson3.decode(text), signature)


# ########
# SPLICING
# ########

class _Splice:
    """
    Connects a piece of net into an existing one. The vertices are either real ports ('port', endpoint), each with
    exactly one edge, or virtual vertices with exactly two edges: the auxiliary slots of removed nodes, the names of a
    rule or configuration and the equations. Following the edges from a real port through the virtual vertices leads
    to the real port it has to be linked to. Cycles made only of virtual vertices are closed loops and vanish.

    CHANGELOG

    Added 10.10.2026
    """
    def __init__(self):
        self.edges: List[Tuple[tuple, tuple]] = []
        self.incident: Dict[tuple, List[int]] = defaultdict(list)

    def join(self, first: tuple, second: tuple):
        index = len(self.edges)
        self.edges.append((first, second))
        self.incident[first].append(index)
        self.incident[second].append(index)

    def place(self, net: PortNet, term: Term, anchor: tuple):
        if isinstance(term, Name):
            self.join(anchor, ('name', term.id))
            return

        node = net.add_node(term.symbol)
        self.join(anchor, ('port', (node, 0)))
        for port, arg in enumerate(term.args, start=1):
            self.place(net, arg, ('port', (node, port)))

    def links(self) -> List[Tuple[Endpoint, Endpoint]]:
        links = []
        used = set()
        for vertex, incident in list(self.incident.items()):
            if vertex[0] != 'port' or incident[0] in used:
                continue

            edge, current = incident[0], vertex
            while True:
                used.add(edge)
                first, second = self.edges[edge]
                following = second if first == current else first
                if following[0] == 'port':
                    links.append((vertex[1], following[1]))
                    break

                rest = [index for index in self.incident[following] if index != edge]
                if len(rest) != 1:
                    raise GraphError('the wire through {} does not continue'.format(following[1]))
                edge, current = rest[0], following
        return links

    def apply(self, net: PortNet) -> List[Tuple[Endpoint, Endpoint]]:
        links = self.links()
        for first, second in links:
            net.connect(first, second)
        return links


def _join_slot(splice: _Splice, net: PortNet, endpoint: Endpoint, removed: Set[int]):
    # The outside end of the wire at a port of a removed node
    peer = net.links[endpoint]
    if peer[0] in removed:
        if endpoint < peer:
            splice.join(('slot', endpoint), ('slot', peer))
    else:
        splice.join(('slot', endpoint), ('port', peer))


def rewrite(net: PortNet, first: Endpoint, second: Endpoint, ruleset: RuleSet) -> List[Tuple[Endpoint, Endpoint]]:
    """
    Replaces the active pair at the principal ports "first" and "second" by the right hand side of its rule. The net
    is changed in place, the new links are returned.

    CHANGELOG

    Added 10.10.2026

    :raises GraphError: if there is no rule for the pair
    :param net:
    :param first:
    :param second:
    :param ruleset:
    :return:
    """
    a, b = first[0], second[0]
    rule = ruleset.lookup(net.nodes[a], net.nodes[b])
    if rule is None:
        raise GraphError('there is no rule for {} >< {}'.format(net.nodes[a], net.nodes[b]))
    a_args, b_args = rule.orient(net.nodes[a], net.nodes[b])

    splice = _Splice()
    for node, args in ((a, a_args), (b, b_args)):
        for port, arg in enumerate(args, start=1):
            _join_slot(splice, net, (node, port), {a, b})
            splice.place(net, arg, ('slot', (node, port)))

    net.remove_node(a)
    net.remove_node(b)
    return splice.apply(net)


def amb_rewrite(net: PortNet, amb_end: Endpoint, other: Endpoint) -> List[Tuple[Endpoint, Endpoint]]:
    """
    Fires the amb agent on its principal port "amb_end", which is linked to the principal port "other". The agent
    connected there is linked to the port m (port 2) of the amb, the other principal port of the amb is linked
    through to its port 3 and the amb node disappears.

    CHANGELOG

    Added 11.10.2026

    :param net:
    :param amb_end:
    :param other:
    :return:
    """
    amb, port = amb_end
    rest = 1 - port

    splice = _Splice()
    for slot in (rest, 2, 3):
        _join_slot(splice, net, (amb, slot), {amb})
    splice.join(('port', other), ('slot', (amb, 2)))
    splice.join(('slot', (amb, rest)), ('slot', (amb, 3)))

    net.remove_node(amb)
    return splice.apply(net)


# ##########################
# NETS AND CONFIGURATIONS
# ##########################

def config_to_net(configuration: Configuration, signature: Optional[Signature] = None) -> PortNet:
    """
    Converts a configuration into a port net. Every head term becomes a tree whose root is linked to the interface in
    head order, every equation links the roots of its two trees, the bound names become wires and the free names
    become further, labelled interface ports in the order of their first occurrence.

    CHANGELOG

    Added 10.10.2026

    :param configuration:
    :param signature: when omitted, a plain signature is derived from the configuration
    :return:
    """
    net = PortNet(signature or signature_of(configuration))
    splice = _Splice()

    for term in configuration.head:
        splice.place(net, term, ('port', net.add_interface()))
    for name in configuration.free_names:
        splice.join(('port', net.add_interface(name)), ('name', name))
    for index, equation in enumerate(configuration.equations):
        for term in equation.sides:
            splice.place(net, term, ('equation', index))

    splice.apply(net)
    return net


class _Namer:
    # Names for the wires of a net: the label for wires reaching a free name, otherwise w0, w1, ...

    def __init__(self, net: PortNet):
        self.net = net
        self.names: Dict[Tuple[Endpoint, Endpoint], str] = {}
        taken = set(label for label in net.labels if label is not None)
        self.fresh = ('w{}'.format(index) for index in itertools.count() if 'w{}'.format(index) not in taken)

    def __call__(self, first: Endpoint, second: Endpoint) -> str:
        for endpoint in (first, second):
            if is_interface(endpoint) and self.net.labels[interface_index(endpoint)] is not None:
                return self.net.labels[interface_index(endpoint)]
        key = (min(first, second), max(first, second))
        if key not in self.names:
            self.names[key] = next(self.fresh)
        return self.names[key]


def net_to_config(net: PortNet) -> Configuration:
    """
    Converts a port net back into a configuration.

    The nodes, whose principal port is linked to an auxiliary port, are the inner nodes of trees; all the others are
    roots. A root linked to an unlabelled interface port is a head term, two roots linked with each other form an
    equation. A cycle of inner nodes is cut at its smallest node, which gives an equation "y = s" with y in s.

    CHANGELOG

    Added 11.10.2026

    :param net:
    :return:
    """
    parent: Dict[int, Endpoint] = {}
    children: Dict[int, List[int]] = defaultdict(list)
    for node in net.nodes:
        peer = net.links[(node, 0)]
        if not is_interface(peer) and peer[1] != 0:
            parent[node] = peer
            children[peer[0]].append(node)

    visited: Set[int] = set()

    def descend(root: int):
        pending = [root]
        while pending:
            node = pending.pop()
            if node in visited:
                continue
            visited.add(node)
            pending += children[node]

    for node in sorted(net.nodes):
        if node not in parent:
            descend(node)

    cut: List[int] = []
    for node in sorted(net.nodes):
        if node in visited:
            continue
        path: Dict[int, int] = {}
        current = node
        while current not in path:
            path[current] = len(path)
            current = parent[current][0]
        cycle = [member for member, position in path.items() if position >= path[current]]
        start = min(cycle)
        cut.append(start)
        descend(start)

    name = _Namer(net)

    def term_of(node: int) -> Agent:
        return Agent(net.nodes[node], tuple(slot_term((node, port)) for port in range(1, net.arity(node) + 1)))

    def slot_term(endpoint: Endpoint) -> Term:
        peer = net.links[endpoint]
        if not is_interface(peer) and peer[1] == 0 and peer[0] not in cut:
            return term_of(peer[0])
        return Name(name(endpoint, peer))

    head: List[Term] = []
    equations: List[Equation] = []

    for index, label in enumerate(net.labels):
        here = interface_endpoint(index)
        peer = net.links[here]
        if is_interface(peer):
            other = net.labels[interface_index(peer)]
            if label is None:
                head.append(Name(other if other is not None else name(here, peer)))
            elif other is not None and here < peer:
                equations.append(Equation(Name(label), Name(other)))
        elif peer[1] == 0:
            term = term_of(peer[0])
            if label is None:
                head.append(term)
            else:
                equations.append(Equation(Name(label), term))
        elif label is None:
            head.append(Name(name(here, peer)))

    for node in sorted(net.nodes):
        if node in parent:
            continue
        peer = net.links[(node, 0)]
        if not is_interface(peer) and peer[0] > node:
            equations.append(Equation(term_of(node), term_of(peer[0])))

    for node in cut:
        equations.append(Equation(Name(name((node, 0), parent[node])), term_of(node)))

    return Configuration(tuple(head), tuple(equations))


# ###############
# GRAPH REDUCTION
# ###############

@dataclass(frozen=True)
class ActivePair:
    first: Endpoint
    second: Endpoint
    symbols: Tuple[str, str]

    kind = INTERACTION

    def __str__(self):
        return '{}#{}><{}#{}'.format(self.symbols[0], self.first[0], self.symbols[1], self.second[0])


def is_head_normal(net: PortNet) -> bool:
    """
    Whether every unlabelled interface port of the net is in head normal form: linked to a principal port, to another
    interface port or to an auxiliary port of a tree that hangs from the interface or from a cycle, without any active
    pair on the way.

    CHANGELOG

    Added 12.10.2026

    :param net:
    :return:
    """
    for index, label in enumerate(net.labels):
        if label is None and not _head_port_normal(net, net.peer(interface_endpoint(index))):
            return False
    return True


def _head_port_normal(net: PortNet, endpoint: Endpoint) -> bool:
    if is_interface(endpoint) or net.is_principal(endpoint):
        return True

    node = endpoint[0]
    seen = set()
    while node not in seen:
        seen.add(node)
        if net.is_amb(node) and net.is_principal(net.links[(node, 1)]):
            return False
        up = net.links[(node, 0)]
        if is_interface(up):
            return net.labels[interface_index(up)] is None
        if net.is_principal(up):
            return False
        node = up[0]
    # The walk went around a cycle
    return True


class GraphReducer:
    """
    Reduces a port net by rewriting active pairs one at a time. The pending active pairs are kept in the order in
    which they appeared. With fairness on, the oldest pending pair is always rewritten next, so no pair that stays
    enabled is starved; otherwise the policy chooses among them.

    CHANGELOG

    Added 12.10.2026
    """
    def __init__(self,
                 ruleset: RuleSet,
                 policy: Optional[SchedulerPolicy] = None,
                 fairness: bool = False,
                 limit: int = DEFAULT_LIMIT,
                 strategy: str = FULL,
                 trace: Optional[TraceCallback] = None):
        self.ruleset = ruleset
        self.policy = policy or Fifo()
        self.fairness = fairness
        self.limit = limit
        self.strategy = strategy
        self.trace = trace
        self.stats = Stats()

        self.logger = logging.getLogger('{}.{}'.format(__name__, self.__class__.__name__))

    def applicable(self, net: PortNet, pair: Tuple[Endpoint, Endpoint]) -> bool:
        first, second = pair
        if net.is_amb(first[0]) or net.is_amb(second[0]):
            return True
        return self.ruleset.lookup(net.nodes[first[0]], net.nodes[second[0]]) is not None

    def fire(self, net: PortNet, pair: Tuple[Endpoint, Endpoint]) -> List[Tuple[Endpoint, Endpoint]]:
        first, second = pair
        # The amb rule takes precedence over every other rule
        if net.is_amb(first[0]):
            return amb_rewrite(net, first, second)
        if net.is_amb(second[0]):
            return amb_rewrite(net, second, first)
        return rewrite(net, first, second, self.ruleset)

    def _finish(self, outcome_class, net: PortNet, blocked=()) -> Outcome:
        outcome = outcome_class(net_to_config(net), self.stats, list(blocked), net)
        self.logger.info('%s after %s interactions', outcome.variant, self.stats.interactions)
        return outcome

    def run(self, net: PortNet) -> Outcome:
        net = net.copy()
        pending: Dict[Tuple[Endpoint, Endpoint], None] = dict.fromkeys(net.active_pairs())

        while True:
            pending = {pair: None for pair in pending if net.links.get(pair[0]) == pair[1]}

            if self.strategy == HEAD and is_head_normal(net):
                return self._finish(HeadNormal, net)

            candidates = [pair for pair in pending if self.applicable(net, pair)]
            if not candidates:
                blocked = [(net.nodes[first[0]], net.nodes[second[0]]) for first, second in pending]
                return self._finish(Blocked if blocked else Normal, net, blocked)

            if self.stats.total >= self.limit:
                self.logger.warning('the limit of %s steps was reached', self.limit)
                return self._finish(LimitExceeded, net)

            pair = candidates[0] if self.fairness else candidates[self.policy.choose(candidates)]
            del pending[pair]
            description = ActivePair(pair[0], pair[1], (net.nodes[pair[0][0]], net.nodes[pair[1][0]]))

            for first, second in self.fire(net, pair):
                if first[0] != second[0] and net.is_principal(first) and net.is_principal(second):
                    pending[(min(first, second), max(first, second))] = None

            self.stats.record(INTERACTION)
            self.logger.debug('rewrote %s', description)
            if self.trace is not None:
                self.trace(self.stats.total, description, net_to_config(net))


def graph_reduce(net: PortNet,
                 ruleset: RuleSet,
                 policy: Optional[SchedulerPolicy] = None,
                 fairness: bool = False,
                 limit: int = DEFAULT_LIMIT,
                 strategy: str = FULL,
                 trace: Optional[TraceCallback] = None) -> Outcome:
    """
    Reduces the net with the given rule set and returns the outcome. The configuration of the outcome is the final net
    converted back, the final net itself is available as the "net" attribute.

    CHANGELOG

    Added 12.10.2026

    :param net:
    :param ruleset:
    :param policy:
    :param fairness: whether the oldest active pair is always rewritten first
    :param limit:
    :param strategy: "full" for the normal form, "head" to stop at the head normal form
    :param trace:
    :return:
    """
    reducer = GraphReducer(ruleset, policy=policy, fairness=fairness, limit=limit, strategy=strategy, trace=trace)
    return reducer.run(net)


# ###################
# PARALLEL REDUCTION
# ###################

def parallel_round(net: PortNet, ruleset: RuleSet) -> Tuple[PortNet, int]:
    """
    Rewrites all the active pairs of the net at once and returns the new net with the number of rewrites. The pairs
    never share a node, because every agent has a single principal port, so the order of the rewrites within the
    round does not matter. Pairs without a rule are left alone.

    CHANGELOG

    Added 13.10.2026

    :raises AmbError: if the net contains an amb agent
    :param net:
    :param ruleset:
    :return:
    """
    if any(net.is_amb(node) for node in net.nodes):
        raise AmbError('parallel rounds are only defined for nets without amb agents')

    pairs = net.active_pairs()
    nodes = [endpoint[0] for pair in pairs for endpoint in pair]
    if len(nodes) != len(set(nodes)):
        raise GraphError('two active pairs share a node')

    result = net.copy()
    rewrites = 0
    for first, second in pairs:
        if ruleset.lookup(net.nodes[first[0]], net.nodes[second[0]]) is not None:
            rewrite(result, first, second, ruleset)
            rewrites += 1
    return result, rewrites


def parallel_reduce(net: PortNet, ruleset: RuleSet, limit: int = DEFAULT_LIMIT) -> Tuple[PortNet, int, int]:
    """
    Repeats parallel rounds until no rule applies. Returns the final net, the number of rounds and the total number
    of rewrites.

    CHANGELOG

    Added 13.10.2026

    :param net:
    :param ruleset:
    :param limit: the maximum number of rounds
    :return:
    """
    rounds = 0
    rewrites = 0
    while rounds < limit:
        net, count = parallel_round(net, ruleset)
        if count == 0:
            break
        rounds += 1
        rewrites += count
    logger.info('%s rewrites in %s rounds', rewrites, rounds)
    return net, rounds, rewrites
