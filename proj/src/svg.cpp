namespace tsurf {}
