# %% [markdown]
# # Perfect codes without long runs of ones
#
# For n = 2^p - 1 the run-avoiding bias keeps every codeword free of
# 1^(3 * 2^(p-2)), so the code is also perfect in Gamma_n(1^s) for that s.
# Pass ``--p5`` to stream the 67 million words of the n = 31 code (a few
# seconds with numpy).

# %%
import sys
import time

from fibcodes import (
    construct_run_avoiding_code,
    example_gamma7_code,
    gamma,
    run_avoiding_bound,
    run_histogram,
    verify_perfect_in_gamma,
    verify_perfect_qn,
)

for p in (2, 3, 4):
    code = construct_run_avoiding_code(p)
    s = run_avoiding_bound(p)
    print(f"p={p} n={code.n} s={s} |C|={len(code)}")
    print("   Q_n:", verify_perfect_qn(code).status,
          f" Gamma_n(1^{s}):", verify_perfect_in_gamma(code, gamma(code.n, s)).status)
    print("   runs:", run_histogram(code))

# %% [markdown]
# A smaller bias on {000, 111} already avoids 1^5 at n = 7.

# %%
ex = example_gamma7_code()
print(sorted(ex.strings()))
print("longest run", ex.max_run(), "|", verify_perfect_in_gamma(ex, gamma(7, 5)).status)

# %%
if "--p5" in sys.argv:
    t = time.perf_counter()
    stream = construct_run_avoiding_code(5)
    hist = run_histogram(stream)
    print(f"p=5: {sum(hist.values())} words, longest run {max(hist)} "
          f"(bound {run_avoiding_bound(5)}), {time.perf_counter() - t:.1f}s")
