import os
from datetime import datetime, timezone

from Constants import MANIFEST_SUFFIX, VERSION
from log_config import main_logger
from model.run_manifest import RunManifest
from util.atomic_file import atomic_write, sha256_of

logger = main_logger


def manifest_path(out):
    return out + MANIFEST_SUFFIX


class RunManifestWriter:
    def __init__(self, command, config, seed):
        self.manifest = RunManifest(command, dict(config), seed, version=str(VERSION))

    def add_input(self, path):
        if path is not None and os.path.isfile(path):
            self.manifest.input_hashes[path] = sha256_of(path)

    def add_output(self, role, path):
        self.manifest.outputs[role] = path

    def write(self, out):
        self.manifest.timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        path = manifest_path(out)
        with atomic_write(path) as f:
            f.write(self.manifest.to_json())
            f.write("\n")
        logger.info("Run manifest written to '{}'".format(path))
        return path
