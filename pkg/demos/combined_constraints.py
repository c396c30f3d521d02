"""Maximizing the completion spread when both constraint kinds apply.

Start-finish lags fix completions at y = a ⊗ x while start-start lags
restrict initiations through c ⊗ x ≤ x.  Substituting the generator
x = closure ⊗ u turns the problem into an unconstrained one on the
composed matrix d = a ⊗ closure.

Run with:  python demos/combined_constraints.py
"""

from tropspan import (Matrix, latest_schedule, max_completion_spread,
                      max_completion_spread_constrained, max_plus)

a = Matrix(max_plus, [[4, 1, 1],
                      [2, 2, 0],
                      [0, 1, 3]])
c = Matrix(max_plus, [[None, -2, 1],
                      [0, None, 2],
                      [-1, None, None]])

report, closure = max_completion_spread_constrained(a, c)
print("composed matrix d = a @ closure:")
print(a @ closure)
print("\nlargest achievable completion spread:", report.delta)
print("(unconstrained, the same project reaches",
      max_completion_spread(a).delta, "- the start-start lags cost us the rest)")

print("\noptimal generator boxes over u (ties produce several):")
for (k, s), fam in zip(report.pairs, report.families):
    parts = []
    for j, bound in enumerate(fam.upper_bounds):
        op = "=" if j == fam.pinned_index else "<="
        parts.append(f"u{j + 1} {op} {bound}")
    print(f"  pinned pair (k={k + 1}, s={s + 1}):  " + ", ".join(parts))

schedules = latest_schedule(report, closure=closure, start_finish=a)
print("\ndistinct latest schedules after deduplication:", len(schedules))
for sched in schedules:
    x = sched.initiation.entries()
    y = sched.completion.entries()
    print("  initiations x =", x)
    print("  completions y =", y)
    print("  feasible (c @ x <= x):", (c @ sched.initiation).leq(sched.initiation))
    print("  spread:", max(y) - min(y))
