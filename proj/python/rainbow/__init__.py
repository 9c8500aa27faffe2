"""Rainbow matchings in properly edge-colored bipartite multigraphs.

Instances are dicts of the form ``{"n": 2, "left": 3, "right": 3, "edges": [[u, v, c], ...]}``.
"""

import json

from . import _core
from ._core import InputError

__all__ = [
    "InputError",
    "validate",
    "digest",
    "solve",
    "shift",
    "reduce",
    "construct",
    "gen_random",
    "gen_latin",
    "evaluate",
    "campaign",
    "random_specs",
]


def _dump(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def validate(instance, counts=False):
    return json.loads(_core.validate(_dump(instance), counts))


def digest(instance):
    return _core.digest(_dump(instance))


def solve(instance, naive=False):
    return json.loads(_core.solve(_dump(instance), naive))


def shift(instance, pivot, donor, side="left"):
    return json.loads(_core.shift(_dump(instance), pivot, donor, side))


def reduce(instance, policy="maxdrain", max_iters=None):
    return json.loads(_core.reduce(_dump(instance), policy, max_iters))


def construct(instance, strategy="first", budget=10000):
    return json.loads(_core.construct(_dump(instance), strategy, budget))


def gen_random(n, left, right, seed=0):
    return json.loads(_core.gen_random(n, left, right, seed))


def gen_latin(order, drop_symbol, seed=0):
    return json.loads(_core.gen_latin(order, drop_symbol, seed))


def evaluate(hypothesis, instance, params=None):
    return json.loads(_core.evaluate(hypothesis, _dump(instance), json.dumps(params) if params else ""))


def random_specs(n, left, right, seed, count):
    return json.loads(_core.random_specs(n, left, right, seed, count))


def campaign(hypothesis, specs, params=None, workers=1):
    return json.loads(_core.campaign(hypothesis, json.dumps(specs), json.dumps(params) if params else "", workers))
