from .ExitCodes import ExitCodes

table = {
            ExitCodes.Success:"Completed successfully.",
            ExitCodes.Usage:"Usage error: check the command line flags.",
            ExitCodes.Validation:"Validation error: an input violates a structural invariant.",
            ExitCodes.Disagreement:"Brute force and line counting disagree, see the diff section of the report."}

class MessageLoader(object):
    """
        Description:
            This class provides access to converting
            exit codes into descriptive strings
    """
    def _loadMessage(cls, code):
        """
        Description:
            This method will return the text string
            associated with the exit code
        Arguments:
            code (in, int)    The exit code
        Return:
            string    The description
        """
        global table
        if ((code in table) is True):
            return table[code]
        else:
            return ""
    load=classmethod(_loadMessage)
