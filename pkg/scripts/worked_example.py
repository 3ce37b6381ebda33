"""The two-dimensional example omega = diag(.2, .8), rho = diag(.8, .2), end to end."""
import numpy as np

from kfidelity import fidelity_vector, geometric_mean_sqrt, optimal_pair, state_pair

pair = state_pair(np.diag([0.2, 0.8]), np.diag([0.8, 0.2]))
fv = fidelity_vector(pair)
print("lambda  :", fv.lambdas)
print("F_k     :", fv.partials)
X = geometric_mean_sqrt(pair)
print("X       :", np.diag(X).real)
print("tau     :", np.diag(X @ pair.omega.matrix @ X).real)
res = optimal_pair(pair, 1)
print("A       :", np.round(res.pair.A.matrix.real, 12).tolist())
print("B       :", np.round(res.pair.B.matrix.real, 12).tolist())
print("objective = %.15f  F_1 = %.15f" % (res.objective, fv[1]))
print("||omega A - B rho|| = %.2e   ||A rho - omega B|| = %.2e" % (res.stationarity_residual, res.printed_residual))
