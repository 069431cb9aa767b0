import hashlib
import json
import os

from . import __version__

def digest(path):
    """
    Description:
        Returns the sha256 hex digest of a file, read in
        64 KiB chunks
    Arguments:
        path (in, str)    The file
    Exceptions:
        OSError
    Return:
        (str)    The value
    """
    sha = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            sha.update(chunk)
    return sha.hexdigest()

class RunManifest(object):
    """
    Description:
        Records how a command was run: the command, its
        resolved parameters, the seed, the tool version and
        the digests of every file it read or wrote.  Running
        the command again with these parameters gives files
        with the same digests
    """
    def __init__(self, command, params, seed=None):
        """
        Description:
            Initializes this instance
        Arguments:
            command (in, str)    Subcommand name
            params (in, dict)    Resolved parameters
            seed (in, int)       Seed in effect, if any
        Return:
            none
        """
        self.__command = command
        self.__params = dict(params)
        self.__seed = seed
        self.__inputs = {}
        self.__outputs = {}
    def getCommand(self):
        return self.__command
    def getParams(self):
        return dict(self.__params)
    def getInputs(self):
        return dict(self.__inputs)
    def getOutputs(self):
        return dict(self.__outputs)
    def addInput(self, path):
        """
        Description:
            Records the digest of a file the command read
        Arguments:
            path (in, str)    The file
        Return:
            none
        """
        self.__inputs[path] = digest(path)
    def addOutput(self, path):
        """
        Description:
            Records the digest of a file the command wrote
        Arguments:
            path (in, str)    The file
        Return:
            none
        """
        self.__outputs[path] = digest(path)
    def verify(self):
        """
        Description:
            Compares the recorded digests with the files on
            disk
        Arguments:
            none
        Return:
            (list of str)    Paths that are missing or changed
        """
        changed = []
        for path, value in sorted(list(self.__inputs.items()) + list(self.__outputs.items())):
            if not os.path.exists(path) or digest(path) != value:
                changed.append(path)
        return changed
    def toDict(self):
        """
        Description:
            Returns the manifest as a JSON-ready dict with
            inputs and outputs sorted by path
        Arguments:
            none
        Return:
            (dict)    The value
        """
        return {"command": self.__command, "params": self.__params, "seed": self.__seed, "version": __version__,
                "inputs": [{"path": k, "sha256": v} for k, v in sorted(self.__inputs.items())],
                "outputs": [{"path": k, "sha256": v} for k, v in sorted(self.__outputs.items())]}
    def write(self, path):
        """
        Description:
            Writes the manifest as indented JSON
        Arguments:
            path (in, str)    Destination file
        Return:
            none
        """
        with open(path, "w") as f:
            json.dump(self.toDict(), f, indent=2, sort_keys=True)
            f.write("\n")
