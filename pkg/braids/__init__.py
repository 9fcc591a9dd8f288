# Braid words, Artin's action and the combed semidirect products
