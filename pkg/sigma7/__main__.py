from sigma7.cli import main

main()
