"""Train a tabular Q-learning agent and measure how close it gets to the
ceiling on achievable expected value.

A noiseless integrated agent should approach the Monte-Carlo bound on
mean chosen EV (~16.29 under the default task distribution); a random
chooser sits near 9.8.  Training runs at a reduced budget here so the
demo finishes in seconds; push `n_train_samples` to 3_000_000 for the
headline numbers.
"""

import numpy as np

from cclab import agent, env, oracle, tasks

dist = tasks.TaskDistribution()
rng = np.random.default_rng(0)

bound = oracle.max_ev_monte_carlo(dist, 200_000, np.random.default_rng(1))
floor = oracle.random_baseline(dist, 200_000, np.random.default_rng(1))
print(f"max-EV bound  : {bound.estimate:.2f} +- {bound.stderr:.3f}")
print(f"random chooser: {floor.estimate:.2f} +- {floor.stderr:.3f}")

obs = env.ObservationModel(sigma_calc=0.0, p_error=0.0)
rewards = env.RewardModel()
episode = env.EpisodeConfig(max_steps=4, gamma=1.0)
learner = agent.LearnerConfig(n_train_samples=1_000_000)

print(f"\ntraining integrated agent for {learner.n_train_samples:,} steps...")
policy, curve = agent.train(dist, env.INTEGRATED, obs, rewards, learner, rng,
                            episode_cfg=episode)
print(f"visited {len(policy):,} evidence states")
for i in (0, len(curve) // 2, len(curve) - 1):
    print(f"  step {int(curve[i, 0]):>9,}  mean episode return {curve[i, 1]:+.2f}")

metrics = agent.evaluate(policy, None, 10_000, obs, rewards,
                         np.random.default_rng(100), kind=env.INTEGRATED,
                         dist=dist, episode_cfg=episode)
print(f"\nheld-out accuracy  : {metrics.accuracy:.3f}")
print(f"mean chosen EV     : {metrics.mean_chosen_ev:.2f} "
      f"(bound {bound.estimate:.2f})")
print(f"observations/trial : {metrics.mean_comparisons:.2f} comparisons, "
      f"{metrics.mean_calculations:.2f} calculations")
