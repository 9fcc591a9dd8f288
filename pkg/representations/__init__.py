# Tensor operators, the Burau module and the bimodule quotients
