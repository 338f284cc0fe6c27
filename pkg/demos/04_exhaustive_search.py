# %% [markdown]
# # Exhaustive search for perfect codes
#
# A perfect code of a graph is a partition of its vertices into closed
# neighbourhoods, so an exact-cover solver enumerates all of them.

# %%
from fibcodes import conjecture_scan, min_s, search_perfect_codes

for n in range(3, 11):
    out = search_perfect_codes(n, 2)
    print(f"Gamma_{n}: {out.vertices:4d} vertices, perfect codes: {out.solution_count}"
          f" (exhausted={out.exhausted}, nodes={out.nodes_expanded})")

# %% [markdown]
# Smallest s for which Gamma_7(1^s) has a perfect code:

# %%
print("min s for n=7:", min_s(7, 7))
out = search_perfect_codes(7, 5)
print(out.solution_count, "perfect codes in Gamma_7(1^5)")

# %% [markdown]
# Every perfect code found for 3 <= n <= 8 is tested against n = 2^p - 1 and
# perfectness in Q_n.

# %%
report = conjecture_scan(range(3, 9))
print(report.table())
print(report.to_kv())
