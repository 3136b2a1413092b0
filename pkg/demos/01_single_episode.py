"""Walk through one episode of the choice POMDP by hand.

Three gambles are hidden from the agent; it can buy noisy pairwise
comparisons (cheap) or noisy expected-value calculations (pricier),
then must commit to one option.  This script plays a sensible scripted
strategy and prints the evidence state after every action.
"""

import numpy as np

from cclab import env
from cclab.env import Episode, EpisodeConfig, ObservationModel, RewardModel
from cclab.tasks import ChoiceSet, Gamble

REL = {env.UNKNOWN: "?", env.GREATER: ">", env.EQUAL: "=", env.LESS: "<"}

cs = ChoiceSet((Gamble(0.8, 20.0), Gamble(0.5, 25.0), Gamble(0.2, 30.0)))
print("Latent choice set (the agent never sees this):")
for name, g in zip("XYZ", cs.options):
    print(f"  {name}: win {g.v:5.1f} with p={g.p:.2f}   EV={g.p * g.v:5.2f}")

episode = Episode(cs, ObservationModel(sigma_calc=2.0, p_error=0.1),
                  RewardModel(), EpisodeConfig(max_steps=10))
rng = np.random.default_rng(7)

plan = [0, 1, 6, 7, 8]  # compare p(X,Y), p(X,Z), then calculate all three
total = 0.0
for action in plan:
    res = episode.step(action, rng)
    total += res.reward
    ev = res.evidence
    rels = "".join(REL[r] for r in ev.rel_p)
    evs = ", ".join("--" if e is None else f"{e:5.2f}" for e in ev.ev)
    print(f"{env.action_name(action):<15} cost {res.reward:+.2f}   "
          f"p-relations[{rels}]  EV estimates[{evs}]")

best_guess = int(np.nanargmax([e if e is not None else -np.inf
                               for e in episode.evidence.ev]))
res = episode.step(9 + best_guess, rng)
total += res.reward
print(f"{env.action_name(9 + best_guess):<15} reward {res.reward:+.1f}   "
      f"episode return {total:+.2f}")
print()
print("Full trace (line-delimited JSON):")
for line in episode.trace_lines():
    print(" ", line)
