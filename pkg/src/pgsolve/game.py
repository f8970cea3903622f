"""Parity game graphs: ownership, priorities, subgames, attractors, SCCs.

Games use the min-parity convention throughout: the winner of a play is the
player whose parity matches the least priority seen infinitely often.
Vertices are dense integer indices; names are optional metadata only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import IntEnum


class Player(IntEnum):
    """EVEN wins plays whose decisive priority is even; ODD the others."""

    EVEN = 0
    ODD = 1

    @property
    def opponent(self) -> "Player":
        return Player(1 - self.value)


def winner_of_priority(p: int) -> Player:
    return Player(p % 2)


@dataclass
class Strategy:
    """Partial positional strategy of one player: vertex -> chosen successor."""

    player: Player
    moves: dict = field(default_factory=dict)

    def __getitem__(self, v: int) -> int:
        return self.moves[v]

    def __contains__(self, v: int) -> bool:
        return v in self.moves

    def __len__(self) -> int:
        return len(self.moves)

    def define(self, v: int, w: int) -> None:
        self.moves[v] = w

    def merge_new(self, moves: dict) -> None:
        """Adopt entries for vertices not yet decided; existing entries win."""
        for v, w in moves.items():
            self.moves.setdefault(v, w)

    def restrict(self, region) -> "Strategy":
        keep = set(region)
        return Strategy(self.player, {v: w for v, w in self.moves.items() if v in keep})

    def copy(self) -> "Strategy":
        return Strategy(self.player, dict(self.moves))

    def validate(self, game) -> None:
        """Reject choices on the opponent's vertices or along non-edges."""
        for v, w in self.moves.items():
            if game.owner[v] != self.player:
                raise ValueError(f"strategy for {self.player.name} set on vertex {v} "
                                 f"owned by {Player(game.owner[v]).name}")
            if w not in game.post(v):
                raise ValueError(f"strategy move {v} -> {w} is not an edge")


class ParityGame:
    """Immutable min-parity game with a total edge relation.

    owner[v] is a Player tag, priority[v] a natural, and every vertex has at
    least one successor.  d is one more than the largest priority.
    """

    __slots__ = ("owner", "priority", "successors", "names", "d", "_pred")

    def __init__(self, owner, priority, successors, names=None):
        owner = tuple(Player(o) for o in owner)
        priority = tuple(int(p) for p in priority)
        successors = tuple(tuple(ws) for ws in successors)
        n = len(owner)
        if n == 0:
            raise ValueError("games must be nonempty")
        if not (len(priority) == len(successors) == n):
            raise ValueError("owner, priority and successors must agree in length")
        if any(p < 0 for p in priority):
            raise ValueError("priorities are naturals")
        for v, ws in enumerate(successors):
            if not ws:
                raise ValueError(f"vertex {v} has no successor (edge relation must be total)")
            for w in ws:
                if not 0 <= w < n:
                    raise ValueError(f"successor {w} of vertex {v} is not a vertex")
        if names is not None:
            names = tuple(names)
            if len(names) != n:
                raise ValueError("names must cover all vertices")
        self.owner = owner
        self.priority = priority
        self.successors = successors
        self.names = names
        self.d = 1 + max(priority)
        pred = [[] for _ in range(n)]
        for v, ws in enumerate(successors):
            for w in set(ws):
                pred[w].append(v)
        self._pred = tuple(tuple(sorted(ps)) for ps in pred)

    @property
    def vertex_count(self) -> int:
        return len(self.owner)

    @property
    def vertices(self) -> range:
        return range(len(self.owner))

    def post(self, v: int) -> tuple:
        return self.successors[v]

    def pred(self, v: int) -> tuple:
        return self._pred[v]

    def owned_by(self, player: Player):
        return [v for v in self.vertices if self.owner[v] == player]

    def priority_counts(self) -> list:
        counts = [0] * self.d
        for p in self.priority:
            counts[p] += 1
        return counts

    def min_priority(self, vertices=None) -> int:
        vs = self.vertices if vertices is None else vertices
        return min(self.priority[v] for v in vs)

    def __repr__(self):
        return f"ParityGame(n={self.vertex_count}, d={self.d})"


class GameView:
    """Induced restriction of a game to a vertex subset.

    Keeps original vertex indices; edges leaving the subset are invisible.
    `total` reports whether the restriction is a proper game.
    """

    __slots__ = ("game", "vertex_set", "vertices", "total", "_succ", "_pred")

    def __init__(self, game: ParityGame, vertices):
        self.game = game
        vertex_set = frozenset(vertices)
        for v in vertex_set:
            if not 0 <= v < game.vertex_count:
                raise ValueError(f"{v} is not a vertex of the host game")
        self.vertex_set = vertex_set
        self.vertices = tuple(sorted(vertex_set))
        self._succ = {
            v: tuple(w for w in game.post(v) if w in vertex_set) for v in self.vertices
        }
        pred = {v: [] for v in self.vertices}
        for v in self.vertices:
            for w in set(self._succ[v]):
                pred[w].append(v)
        self._pred = {v: tuple(sorted(ps)) for v, ps in pred.items()}
        self.total = all(self._succ[v] for v in self.vertices)

    def post(self, v: int) -> tuple:
        return self._succ[v]

    def pred(self, v: int) -> tuple:
        return self._pred[v]

    @property
    def owner(self) -> tuple:
        # original indices remain valid against the host game's arrays
        return self.game.owner

    @property
    def priority(self) -> tuple:
        return self.game.priority

    def __contains__(self, v: int) -> bool:
        return v in self.vertex_set

    def __len__(self) -> int:
        return len(self.vertices)

    def to_game(self):
        """Materialize as a dense game; returns (game, original_indices)."""
        if not self.total:
            raise ValueError("cannot materialize a non-total restriction")
        index = {v: i for i, v in enumerate(self.vertices)}
        g = self.game
        owner = [g.owner[v] for v in self.vertices]
        priority = [g.priority[v] for v in self.vertices]
        succ = [[index[w] for w in self._succ[v]] for v in self.vertices]
        names = None
        if g.names is not None:
            names = [g.names[v] for v in self.vertices]
        return ParityGame(owner, priority, succ, names), self.vertices

    def __repr__(self):
        return f"GameView({len(self.vertices)} of {self.game.vertex_count}, total={self.total})"


def subgame(game: ParityGame, vertices) -> GameView:
    """Restriction of the game to `vertices`; totality reported via the view."""
    return GameView(game, vertices)


def attractor(game: ParityGame, player: Player, targets, within=None):
    """Least set from which `player` forces reaching `targets` inside `within`.

    Edges leaving `within` are invisible.  Returns the set and the attractor
    strategy on the player's non-target vertices in it; each choice is the
    lowest-index successor already attracted when the vertex joined.
    """
    within = set(game.vertices) if within is None else set(within)
    targets = set(targets)
    if not targets <= within:
        raise ValueError("targets must lie within the restriction")
    attracted = set(targets)
    strategy = Strategy(Player(player))
    nsucc: dict = {}
    queue = deque(sorted(targets))
    while queue:
        u = queue.popleft()
        for v in game.pred(u):
            if v not in within or v in attracted:
                continue
            if game.owner[v] == player:
                attracted.add(v)
                strategy.moves[v] = min(w for w in game.post(v) if w in attracted)
                queue.append(v)
            else:
                if v not in nsucc:
                    nsucc[v] = len({w for w in game.post(v) if w in within})
                nsucc[v] -= 1
                if nsucc[v] == 0:
                    attracted.add(v)
                    queue.append(v)
    return attracted, strategy


def guarded_attractor(game: ParityGame, k: int, targets, within=None):
    """Attraction for the odd player restricted to priorities at least k.

    Odd vertices join on one attracted successor; even vertices join when all
    their `within`-successors are attracted.  The set never leaves
    `within` ∩ V_{>=k}.  Returns the set and the odd player's attracting
    strategy on the non-target odd vertices.
    """
    within = set(game.vertices) if within is None else set(within)
    allowed = {v for v in within if game.priority[v] >= k}
    targets = set(targets)
    if not targets <= allowed:
        raise ValueError("targets must lie within the restriction and have priority >= k")
    attracted = set(targets)
    strategy = Strategy(Player.ODD)
    nsucc: dict = {}
    queue = deque(sorted(targets))
    while queue:
        u = queue.popleft()
        for v in game.pred(u):
            if v not in allowed or v in attracted:
                continue
            if game.owner[v] == Player.ODD:
                attracted.add(v)
                strategy.moves[v] = min(w for w in game.post(v) if w in attracted)
                queue.append(v)
            else:
                if v not in nsucc:
                    nsucc[v] = len({w for w in game.post(v) if w in within})
                nsucc[v] -= 1
                if nsucc[v] == 0:
                    attracted.add(v)
                    queue.append(v)
    return attracted, strategy


@dataclass(frozen=True)
class Component:
    """A strongly connected component; bottom iff no edge leaves it."""

    vertices: frozenset
    bottom: bool


def scc_decompose(view) -> list:
    """Maximal strongly connected components of a game or view.

    Iterative Tarjan, so recursion depth does not grow with the graph.
    Components are emitted before any component that can reach them.
    """
    order = list(view.vertices)
    index: dict = {}
    lowlink: dict = {}
    on_stack: set = set()
    stack: list = []
    components = []
    counter = 0
    for root in order:
        if root in index:
            continue
        work = [(root, iter(view.post(root)))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, succ_it = work[-1]
            advanced = False
            for w in succ_it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(view.post(w))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                bottom = all(u in comp for x in comp for u in view.post(x))
                components.append(Component(frozenset(comp), bottom))
    return components


def dualize(game: ParityGame) -> ParityGame:
    """Shift every priority by one and swap ownership; winners swap players."""
    return ParityGame(
        [Player(o).opponent for o in game.owner],
        [p + 1 for p in game.priority],
        game.successors,
        game.names,
    )


def is_solitaire(game) -> str:
    """Which player has any real choice (a vertex with two or more distinct
    successors): 'even', 'odd', 'both' or 'neither'."""
    choice = {Player.EVEN: False, Player.ODD: False}
    for v in game.vertices:
        if len(set(game.post(v))) > 1:
            choice[Player(game.owner[v])] = True
    if choice[Player.EVEN] and choice[Player.ODD]:
        return "both"
    if choice[Player.EVEN]:
        return "even"
    if choice[Player.ODD]:
        return "odd"
    return "neither"
