"""Name-keyed plugin registry for planners and samplers.

Built-in entries are registered when this module is imported. Third-party
code adds its own with :func:`register_planner` / :func:`register_sampler`
(or the ``@planner(...)`` / ``@sampler(...)`` decorators) and everything
that selects components by name, including the CLI, picks them up.
"""

from __future__ import annotations

import re
from typing import Callable

from .errors import InvalidNameError, NotFoundError, RegistrationConflictError
from .planners import PRM, RRT, RRTConnect, RRTStar
from .samplers import GoalBiasedSampler, InformedSampler, UniformSampler

_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")


class Registry:
    def __init__(self):
        self._planners: dict[str, Callable] = {}
        self._samplers: dict[str, Callable] = {}

    @staticmethod
    def _put(table: dict, kind: str, name: str, factory: Callable) -> None:
        if not isinstance(name, str) or not _NAME.match(name):
            raise InvalidNameError(f"invalid {kind} name {name!r}: must match [a-z][a-z0-9_]*")
        if name in table:
            raise RegistrationConflictError(f"{kind} {name!r} is already registered")
        if not callable(factory):
            raise TypeError(f"{kind} factory for {name!r} is not callable")
        table[name] = factory

    @staticmethod
    def _get(table: dict, kind: str, name: str, kwargs: dict):
        try:
            factory = table[name]
        except (KeyError, TypeError):
            available = ", ".join(sorted(table))
            raise NotFoundError(f"unknown {kind} {name!r}; available: {available}") from None
        return factory(**kwargs)

    def register_planner(self, name: str, factory: Callable) -> None:
        self._put(self._planners, "planner", name, factory)

    def register_sampler(self, name: str, factory: Callable) -> None:
        self._put(self._samplers, "sampler", name, factory)

    def create_planner(self, name: str, **kwargs):
        return self._get(self._planners, "planner", name, kwargs)

    def create_sampler(self, name: str, **kwargs):
        return self._get(self._samplers, "sampler", name, kwargs)

    def list_planners(self) -> list[str]:
        return sorted(self._planners)

    def list_samplers(self) -> list[str]:
        return sorted(self._samplers)

    def has_planner(self, name: str) -> bool:
        return name in self._planners

    def has_sampler(self, name: str) -> bool:
        return name in self._samplers


def _goal_biased(p_goal: float = 0.05, **_):
    return GoalBiasedSampler(p_goal)


def _ignoring_params(cls):
    # samplers without tunables still accept the shared keyword set
    def factory(**_):
        return cls()

    factory.__name__ = cls.__name__
    return factory


def with_builtins(reg: Registry | None = None) -> Registry:
    reg = reg if reg is not None else Registry()
    for cls in (RRT, RRTStar, RRTConnect, PRM):
        reg.register_planner(cls.name, cls)
    reg.register_sampler("uniform", _ignoring_params(UniformSampler))
    reg.register_sampler("goal_biased", _goal_biased)
    reg.register_sampler("informed", _ignoring_params(InformedSampler))
    return reg


default_registry = with_builtins()

register_planner = default_registry.register_planner
register_sampler = default_registry.register_sampler
create_planner = default_registry.create_planner
create_sampler = default_registry.create_sampler
list_planners = default_registry.list_planners
list_samplers = default_registry.list_samplers


def planner(name: str):
    """Class decorator registering a planner under ``name``."""

    def deco(cls):
        register_planner(name, cls)
        return cls

    return deco


def sampler(name: str):
    """Class decorator registering a sampler under ``name``.

    The class is called with the sampler keyword parameters (currently
    ``p_goal``) it declares; others are dropped.
    """

    def deco(cls):
        import inspect

        accepted = set(inspect.signature(cls).parameters)

        def factory(**kwargs):
            return cls(**{k: v for k, v in kwargs.items() if k in accepted})

        register_sampler(name, factory)
        return cls

    return deco
