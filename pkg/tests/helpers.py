import numpy as np

from SCLdpc.ABBase import ABBase
from SCLdpc.AssignmentMatrix import AssignmentMatrixBm
from SCLdpc.CodeFactory import CodeFactory
from SCLdpc.CuttingVector import CuttingVector
from SCLdpc.ExitCodes import AssignmentKind, CouplingMode

def cuttingVectorSpec(xi, p, L, mode=CouplingMode.Terminated):
    return CodeFactory.createInstance(AssignmentKind.CuttingVector, ABBase(3, p), L, None, mode,
                                      cuttingVector=CuttingVector(xi, p))

def bmSpec(grid, m, L, mode=CouplingMode.Terminated, lambdaPolicy=None):
    grid = np.asarray(grid)
    return CodeFactory.createInstance(AssignmentKind.Bm, ABBase(grid.shape[0], grid.shape[1]), L, m, mode,
                                      assignmentMatrix=AssignmentMatrixBm(grid, m), lambdaPolicy=lambdaPolicy)

def randomGrid(rng, p, m, gamma=3):
    grid = rng.integers(0, m + 1, size=(gamma, p))
    grid[rng.integers(gamma), rng.integers(p)] = m
    return grid
