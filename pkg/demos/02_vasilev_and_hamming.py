# %% [markdown]
# # The Vasilev doubling step
#
# From a perfect code of Q_r and any 0/1 bias function, the words
# x || (parity(x) + f(c)) || (x + c) form a perfect code of Q_{2r+1}.

# %%
import random

from fibcodes import BiasFunction, Code, hamming_code, vasilev_extend, verify_perfect_qn

base = Code.from_strings(["000", "111"])
zero = vasilev_extend(base, BiasFunction.zero(3))
print("zero bias:", len(zero), "words,", verify_perfect_qn(zero).status)
print("same as the Hamming code of length 7:", zero == hamming_code(3))

# %% [markdown]
# Any bias gives a perfect code; most of them are not linear.

# %%
rng = random.Random(0)
for _ in range(5):
    table = {format(i, "03b"): rng.randint(0, 1) for i in range(8)}
    code = vasilev_extend(base, BiasFunction.from_table(3, table))
    linear = all(int(a) ^ int(b) in set(code.masks.tolist()) for a in code.masks for b in code.masks)
    print(table, verify_perfect_qn(code).status, "linear" if linear else "non-linear")

# %%
for p in range(1, 5):
    h = hamming_code(p)
    print(f"p={p}: n={h.n}, |C|={len(h)}, longest run={h.max_run()}")
