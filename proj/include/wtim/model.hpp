#pragma once

// Worker-task interaction kernel.
//
// A worker with ability e facing a task with difficulty d and k candidate
// labels picks the correct answer with probability
//
//   p = d * (1/k) + (1 - d) * e^d
//
// which interpolates between full confidence (d = 0 gives p = 1 for any
// worker) and blind guessing (d = 1 gives p = 1/k). Wrong answers are
// spread uniformly over the k - 1 remaining labels. Worker abilities are
// clamped to [kMinAbility, 1] so e^d is well defined at e = 0, d = 0.

namespace wtim {

// Lower clamp for worker abilities; avoids the 0^0 singularity of e^d.
inline constexpr double kMinAbility = 1e-6;

// Argmax location of the difficulty-discriminability curve; tasks near
// this difficulty separate workers of different ability best.
inline constexpr double kPeakDifficulty = 0.4;

double clamp_ability(double e);

// p = d/k + (1-d) * e^d. Requires k >= 2, d in [0,1], e in [kMinAbility, 1].
// Exactly 1 at d = 0 and exactly 1/k at d = 1.
double confidence(double d, double e, int k);

// Probability that a worker with correct-answer confidence p emits label
// `answer` when the truth is `truth`: p on a match, (1-p)/(k-1) otherwise.
double annotation_likelihood(int answer, int truth, double p, int k);

// Tent weight peaking at d = 0.4, zero at both ends of [0,1]. Used to
// damp the influence of very easy and very hard tasks on ability updates.
double difficulty_weight(double d);

// Confidence gap (1-d) * (e1^d - e2^d) between two workers, e1 > e2.
// Analysis aid only; not used by the inference loop.
double discriminability(double e1, double e2, double d);

}  // namespace wtim
