import os

from Constants import APP_NAME, LINER, VERSION
from log_config import main_logger
from util.args_validator import validate
from util.parser import build_parser

logger = main_logger

BANNER_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "banner.txt")


def print_banner():
    if os.path.isfile(BANNER_FILE):
        with open(BANNER_FILE, "rt", encoding="utf-8") as file:
            print(file.read())
    print(LINER, flush=True)
    print("{} {}: numeral system description lengths".format(APP_NAME, VERSION))
    print(LINER, flush=True)


def parse_arguments(argv=None):
    parser = build_parser()
    # Basic validations
    args = validate(parser, argv)
    return args
