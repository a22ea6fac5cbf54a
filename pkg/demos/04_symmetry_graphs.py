"""Rauzy graphs and graphs of symmetries, with the tree-like-structure test.

Run:  python demos/04_symmetry_graphs.py
"""

from symrich import (
    LanguageIndex,
    directed_symmetry_graph,
    rauzy_graph,
    tls_verdict,
    undirected_symmetry_graph,
)
from symrich.presets import (
    BINARY,
    binary_full_group,
    fibonacci_source,
    reversal_group,
    thue_morse_source,
)

tm = thue_morse_source().prefix(2000)
full = binary_full_group()
rev = reversal_group(BINARY)

index_full = LanguageIndex(tm, 12, full)
index_rev = LanguageIndex(tm, 12, rev)

print("Rauzy graph of order 3 (vertices = factors, edges = one-letter extensions):")
print(rauzy_graph(index_full, 3).to_dot())

print("directed graph of symmetries, order 3, full group:")
print(directed_symmetry_graph(full, index_full, 3).to_dot())

print("undirected graph (edges collapse into orbit classes):")
print(undirected_symmetry_graph(full, index_full, 3).to_dot())

verdict = tls_verdict(full, index_full, 3)
print("tree-like structure under the full group:", verdict.satisfied)

# the same word under the smaller reversal-only group loses the structure
verdict_rev = tls_verdict(rev, index_rev, 3)
print("tree-like structure under reversal only :", verdict_rev.satisfied,
      "|", verdict_rev.witness)
print()
print(undirected_symmetry_graph(rev, index_rev, 3).to_dot())

fib_index = LanguageIndex(fibonacci_source().prefix(2000), 12, rev)
print("Fibonacci word, order 3 (single class, two palindromic loops):")
print(undirected_symmetry_graph(rev, fib_index, 3).to_dot())
