from bicliquecount.application import main
main()
