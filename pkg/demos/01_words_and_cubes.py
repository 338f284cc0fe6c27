# %% [markdown]
# # Binary words and generalized Fibonacci cubes
#
# Words are bitmasks with the leftmost character at bit 0.

# %%
from fibcodes import Word, concat, gamma, hamming_distance, max_run_ones, parity, vertex_count

x = Word.parse("0110111")
print(x, "bits =", x.bits, "parity =", parity(x), "longest run =", max_run_ones(x))
print("0110111 || 000 =", concat(x, Word.parse("000")))
print("d(010, 101) =", hamming_distance(Word.parse("010"), Word.parse("101")))

# %% [markdown]
# Gamma_n(1^s) keeps the words without s consecutive ones.  For s = 2 this is
# the Fibonacci cube and the vertex counts are Fibonacci numbers.

# %%
g = gamma(3, 2)
print(g.descriptor, [str(v) for v in g.vertices()])
print("neighbours of 000:", [str(v) for v in g.neighbors(Word.parse("000"))])

for s in range(2, 6):
    print(f"s={s}:", [vertex_count(n, s) for n in range(1, 13)])
