"""How many 100-symbol DNA strings contain ATG exactly five times?

A question like this is hopeless by enumeration (4**100 strings) but
takes a fraction of a millisecond in closed form.  On a small cousin of
the problem we can also watch the closed form land on the same number as
brute force, which is the whole point of the package.
"""

from subwordcount import ProblemInstance, count_single, enumerate_count

# The closed form for one pattern only needs the sizes: the alphabet, the
# word length, the pattern length, and the required occurrence count.
# The pattern content matters only through its applicability (it must not
# overlap shifted copies of itself; ATG does not).
big = count_single(alphabet_size=4, word_length=100, pattern_length=3, required_count=5)
print("length-100 ACGT words with ATG exactly 5 times:")
print(f"  {big.total}")
print(f"  ({len(str(big.total))} digits, {len(big.terms)} summation terms)")
print()

# Each term places i copies of the pattern, i = 5 .. 33, with alternating
# corrections; the first few dominate.
print("first three terms of the signed summation:")
for indices, value in big.terms[:3]:
    print(f"  copies={indices[0]:>2}  {value:+}")
print()

# Scale the same question down until brute force is possible, then check.
small = ProblemInstance.from_pairs(4, 10, [((0, 3, 2), 2)])  # ATG twice, length 10
closed = count_single(4, 10, 3, 2).total
brute = enumerate_count(small)  # walks all 4**10 = 1048576 words
print(f"length-10 check: closed form {closed}, enumeration {brute}, equal={closed == brute}")
