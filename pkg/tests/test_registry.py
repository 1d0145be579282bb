import pytest

from plankit import registry as reg_mod
from plankit.errors import InvalidNameError, NotFoundError, RegistrationConflictError
from plankit.planners import PRM, RRT, RRTConnect, RRTStar
from plankit.registry import Registry, with_builtins
from plankit.samplers import GoalBiasedSampler, InformedSampler, Sampler, UniformSampler

BUILTIN_PLANNERS = ["prm", "rrt", "rrt_connect", "rrt_star"]
BUILTIN_SAMPLERS = ["goal_biased", "informed", "uniform"]


@pytest.fixture
def reg():
    return with_builtins(Registry())


def test_fresh_listings(reg):
    assert reg.list_planners() == BUILTIN_PLANNERS
    assert reg.list_samplers() == BUILTIN_SAMPLERS


@pytest.mark.parametrize(
    "name, cls", [("rrt", RRT), ("rrt_star", RRTStar), ("rrt_connect", RRTConnect), ("prm", PRM)]
)
def test_create_builtin_planners(reg, name, cls):
    assert type(reg.create_planner(name)) is cls


@pytest.mark.parametrize(
    "name, cls",
    [("uniform", UniformSampler), ("goal_biased", GoalBiasedSampler), ("informed", InformedSampler)],
)
def test_create_builtin_samplers(reg, name, cls):
    assert type(reg.create_sampler(name)) is cls


def test_sampler_params_forwarded(reg):
    assert reg.create_sampler("goal_biased", p_goal=0.25).p_goal == 0.25
    assert isinstance(reg.create_sampler("uniform", p_goal=0.25), UniformSampler)


def test_register_and_create(reg):
    class MyRRT(RRT):
        name = "my_rrt"

    reg.register_planner("my_rrt", MyRRT)
    assert isinstance(reg.create_planner("my_rrt"), MyRRT)


def test_duplicate_name_conflicts(reg):
    with pytest.raises(RegistrationConflictError):
        reg.register_planner("rrt", RRT)
    with pytest.raises(RegistrationConflictError):
        reg.register_sampler("uniform", UniformSampler)
    reg.register_planner("extra", RRT)
    with pytest.raises(RegistrationConflictError):
        reg.register_planner("extra", RRTStar)
    assert type(reg.create_planner("extra")) is RRT


@pytest.mark.parametrize("name", ["My-RRT", "RRT", "1rrt", "", "rrt-2", "_rrt", "rrt ", "é"])
def test_malformed_names(reg, name):
    with pytest.raises(InvalidNameError):
        reg.register_planner(name, RRT)
    with pytest.raises(InvalidNameError):
        reg.register_sampler(name, UniformSampler)
    assert reg.list_planners() == BUILTIN_PLANNERS


def test_unknown_name_lists_builtins(reg):
    with pytest.raises(NotFoundError) as info:
        reg.create_planner("does_not_exist")
    msg = str(info.value)
    assert "does_not_exist" in msg
    for name in BUILTIN_PLANNERS:
        assert name in msg
    with pytest.raises(NotFoundError) as info:
        reg.create_sampler("nope")
    for name in BUILTIN_SAMPLERS:
        assert name in str(info.value)


def test_instances_are_distinct(reg):
    a, b = reg.create_planner("rrt"), reg.create_planner("rrt")
    assert a is not b
    a.custom = 1
    assert not hasattr(b, "custom")
    s1, s2 = reg.create_sampler("uniform"), reg.create_sampler("uniform")
    s1.report(True)
    assert s2.report_count == 0


def test_zeta_sorts_last(reg):
    reg.register_planner("zeta", RRT)
    assert reg.list_planners() == BUILTIN_PLANNERS + ["zeta"]


def test_listing_creation_bijection_and_monotone(reg):
    seen = []
    for name in ["alpha", "mid_1", "zz9"]:
        before = set(reg.list_planners())
        reg.register_planner(name, RRT)
        after = set(reg.list_planners())
        assert before < after
        seen.append(after)
    for name in reg.list_planners():
        reg.create_planner(name)
    for name in reg.list_samplers():
        reg.create_sampler(name)
    # nothing outside the listing is creatable
    for name in ["beta", "rrt_", "prm2"]:
        with pytest.raises(NotFoundError):
            reg.create_planner(name)


def test_decorators_use_default_registry():
    name = "decorated_test_sampler"
    if name not in reg_mod.list_samplers():

        @reg_mod.sampler(name)
        class Fixed(Sampler):
            def __init__(self, p_goal=0.0):
                super().__init__()
                self.p_goal = p_goal

            def _draw(self, ctx, rng):
                return ctx.goal

    made = reg_mod.create_sampler(name, p_goal=0.5, unrelated=1)
    assert made.p_goal == 0.5
    assert name in reg_mod.list_samplers()
