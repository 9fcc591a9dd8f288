# Knot invariants from Yang-Baxter operators, brute-force oracles and the bundled knot table
