# Free groups, group rings and Laurent polynomials
