
class ExitCodes(object):
        """
        Description:
            This class defines the process exit codes of
            the command line tool.  These are stable across
            versions
        """
        Success=0
        Usage=1                        #Conflicting or missing flags
        Validation=2                   #Input breaks a structural invariant
        Disagreement=3                 #Brute force and line counting differ

class CountMethod(object):
        """
        Description:
            This class defines the absorbing set counting
            backends
        """
        Brute='brute'
        Line='line'
        Both='both'
        All=(Brute, Line, Both)

class AssignmentKind(object):
        """
        Description:
            This class defines the ways an edge assignment
            can be produced
        """
        CuttingVector='cutting-vector'
        Bm='bm'
        RandomI='random-i'
        RandomII='random-ii'
        All=(CuttingVector, Bm, RandomI, RandomII)

class CouplingMode(object):
        """
        Description:
            This class defines the two shapes of a spatially
            coupled matrix
        """
        Tailbiting='tailbiting'
        Terminated='terminated'
        All=(Tailbiting, Terminated)

class MemoryMode(object):
        """
        Description:
            This class defines the window placement rules
        """
        Memory1=1                      #S >= 2, gamma(S-1)+1 block rows
        Memory2=2                      #S >= 4, gamma(S-3)+1 block rows
        All=(Memory1, Memory2)
