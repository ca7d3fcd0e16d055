from schedsim.cli import entry

entry()
