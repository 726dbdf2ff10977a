import sys

from Constants import PYTHON_MAJOR, PYTHON_MINOR


def start_application(argv=None):
    # imported here so a too old interpreter fails on the version check below
    from util.process_life_cycle import ProcessLifeCycle

    life_cycle = ProcessLifeCycle(argv=argv)
    return life_cycle.start()


if __name__ == "__main__":
    # Check the python version
    if (sys.version_info.major, sys.version_info.minor) < (PYTHON_MAJOR, PYTHON_MINOR):
        raise Exception(
            "Must be using Python {}.{} or later but it is {}.{}".format(
                PYTHON_MAJOR,
                PYTHON_MINOR,
                sys.version_info.major,
                sys.version_info.minor,
            )
        )
    sys.exit(start_application())
