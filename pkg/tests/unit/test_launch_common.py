from launch_common import parse_arguments, print_banner


def test_print_banner(capsys):
    print_banner()
    output = capsys.readouterr().out
    assert "NMDL 1.0: numeral system description lengths" in output


def test_parse_arguments():
    args = parse_arguments(["dfa", "--input", "in.csv", "--system", "karo_batak", "--dot", "k.dot"])
    assert args.command == "dfa"
    assert args.system == "karo_batak"
    assert args.verbose == "off"
