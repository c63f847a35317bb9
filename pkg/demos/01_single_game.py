"""Walk through one game instance: payoffs, best responses, and the world.

A frontrunner with a solid lead (delta = 0.5) facing a catastrophe cost of
10 safe-win units sits deep in Safe Harmony: racing gains it almost nothing
and risks everything.
"""

from raceworlds import (
    GameParams,
    Role,
    Strategy,
    best_response,
    classify_world,
    expected_utility,
    pure_nash,
)

params = GameParams(delta=0.5, winner_advantage=1.0, cost=10.0, sigma=0.1, s_race=0.85)
print(f"game: {params}\n")

print("expected utilities (frontrunner, laggard):")
for f_strat in Strategy:
    for l_strat in Strategy:
        eu_f = expected_utility(Role.FRONTRUNNER, f_strat, l_strat, params)
        eu_l = expected_utility(Role.LAGGARD, l_strat, f_strat, params)
        print(f"  F={f_strat.value:<5} L={l_strat.value:<5} -> ({eu_f:+.6f}, {eu_l:+.6f})")

print("\nbest responses:")
for role in Role:
    for rival in Strategy:
        strategy, tied = best_response(role, rival, params)
        note = " (exact tie)" if tied else ""
        print(f"  {role.value} vs {rival.value}: {strategy.value}{note}")

equilibria = pure_nash(params)
names = sorted(f"({p.frontrunner.value}, {p.laggard.value})" for p in equilibria.profiles)
print(f"\npure Nash equilibria: {', '.join(names)}")
print(f"world: {classify_world(params).value}")
