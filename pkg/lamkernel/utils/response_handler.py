from typing import Any, Dict, List, Union

EXIT_SUCCESS = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class ResponseHandler:
    @staticmethod
    def success(
        data: Union[List, str, Any] = None,
        message: str = "Operation successful"
    ) -> Dict:
        """
        Create a success response

        Args:
            data: Payload for stdout (a string or a list of lines)
            message: Success message

        Returns:
            Dict containing standardized success response
        """
        if data is None:
            data = []

        return {
            "success": True,
            "data": data,
            "error": None,
            "message": message,
            "exit_code": EXIT_SUCCESS
        }

    @staticmethod
    def negative(
        data: Union[List, str, Any] = None,
        error: str = None,
        message: str = "Property does not hold"
    ) -> Dict:
        """
        Create a response for a well-formed request whose answer is no
        (ill-typed, not alpha-equal, fuel exhausted, ...)

        Args:
            data: Payload for stdout, if any
            error: Explanation for stderr
            message: Negative message

        Returns:
            Dict containing standardized negative response
        """
        if data is None:
            data = []

        return {
            "success": False,
            "data": data,
            "error": error,
            "message": message,
            "exit_code": EXIT_NEGATIVE
        }

    @staticmethod
    def error(
        error: str = "Invalid input",
        message: str = "Operation failed"
    ) -> Dict:
        """
        Create an error response for usage or parse errors

        Args:
            error: Error details
            message: Error message

        Returns:
            Dict containing standardized error response
        """
        return {
            "success": False,
            "data": [],
            "error": error,
            "message": message,
            "exit_code": EXIT_USAGE
        }
