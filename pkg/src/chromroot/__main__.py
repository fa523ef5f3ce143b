from chromroot.cli import main

main()
