from bcm.main import run

run()
