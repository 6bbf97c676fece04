from functools import partial


_HARDPATHS_LOG_HEADER = "[HardPaths] "
_HARDPATHS_WNG_HEADER = "[HardPaths warning] "
_HARDPATHS_ERR_HEADER = "[HardPaths error] "


def hardpaths_msg_header(header: str, obj_name: str = "") -> str:
    """Create a header for HardPaths log, warning or error messages.

    Arguments:
        obj_name: the (optional) name of the function or object class that
            is triggering the message.

    """
    return header + (f"{obj_name}: " if obj_name != "" else obj_name)


hardpaths_log_header = partial(hardpaths_msg_header, header=_HARDPATHS_LOG_HEADER)
hardpaths_wng_header = partial(hardpaths_msg_header, header=_HARDPATHS_WNG_HEADER)
hardpaths_err_header = partial(hardpaths_msg_header, header=_HARDPATHS_ERR_HEADER)
