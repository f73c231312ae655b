"""
A partition-counting identity that detects primes
=================================================

"""

from qprime import macmahon_table, prime_identity
from qprime.macmahon import relation_value, PRIME_RELATION

# M_a(n) counts partitions of n with exactly a distinct part sizes, each
# partition weighted by the product of its multiplicities
table = macmahon_table(2, 50)
print(" n  M_1  M_2   (n^2-3n+2) M_1(n) - 8 M_2(n)   prime?")
for n in range(2, 21):
    value = relation_value(PRIME_RELATION, n, table)
    holds, prime = prime_identity(n, table)
    print(f"{n:>2}  {table.m(1, n):>3}  {table.m(2, n):>3}   {value:>10}   {prime}")

# the relation vanishes exactly at the primes
mismatches = [n for n in range(2, 51) if prime_identity(n, table)[0] != prime_identity(n, table)[1]]
print("\nmismatches up to 50:", mismatches)

# CSV export, ready for a spreadsheet
print("\n" + "\n".join(table.to_csv().splitlines()[:6]))
