"""
Counting partitions through their words
=======================================

A d-dimensional partition of n is stored as a word of length n - 1 over the
letters 0..d.  Enumerating the valid words reproduces the classical counts:
ordinary partitions for d = 1, plane partitions for d = 2 and solid
partitions for d = 3.
"""

from pwords import enumerate_words, to_partition

# ordinary partitions: a word is blocks of 1s split by 0s, block lengths
# non-increasing
for n in range(1, 11):
    print("d=1", n, len(enumerate_words(1, n)))

# plane and solid partitions
print("d=2", [len(enumerate_words(2, n)) for n in range(1, 11)])
print("d=3", [len(enumerate_words(3, n)) for n in range(1, 9)])

# every word decodes to an actual array of cells
ws = enumerate_words(2, 4)
for w in ws.words:
    print(repr(w), to_partition(w, 2).as_dict())

# the split of n into parts: the number of zeros is the number of parts - 1
ws = enumerate_words(1, 6)
for w in ws.words:
    print(w, [len(b) + 1 for b in w.split("0")])
